#include "mist/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mist/errors.hpp"

namespace mist {

namespace {

// mt19937_64's output sequence is fixed by the standard; the distributions are
// not, so bounded draws are done by rejection here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = 0;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(below(static_cast<std::uint64_t>(i)))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

long pair_count(int n) { return static_cast<long>(n) * (n - 1) / 2; }

// Adds `extra` uniformly chosen pairs that pass `allowed` and are not yet present.
void add_random_edges(int n, long extra, std::set<Edge>& edges, Rng& rng, auto allowed) {
  if (extra <= 0) return;
  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (allowed(u, v) && !edges.contains({u, v})) candidates.push_back({u, v});
    }
  }
  if (static_cast<long>(candidates.size()) < extra) throw PreconditionError("too many edges requested");
  for (long i = 0; i < extra; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(candidates.size() - static_cast<std::size_t>(i))));
    std::swap(candidates[static_cast<std::size_t>(i)], candidates[j]);
    edges.insert(candidates[static_cast<std::size_t>(i)]);
  }
}

// Uniform labelled tree from a random Pruefer sequence.
std::set<Edge> random_tree(int n, Rng& rng) {
  std::set<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) {
    edges.insert({0, 1});
    return edges;
  }
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = rng.below(n);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  for (int c : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.insert(make_edge(leaf, c));
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.insert(make_edge(a, b));
  return edges;
}

Graph to_graph(int n, const std::set<Edge>& edges) {
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

Graph tree_plus(int n, long m, Rng& rng) {
  std::set<Edge> edges = random_tree(n, rng);
  add_random_edges(n, m - (n - 1), edges, rng, [](Vertex, Vertex) { return true; });
  return to_graph(n, edges);
}

Graph random_gnm(int n, long m, Rng& rng) {
  constexpr int kAttempts = 100;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::set<Edge> edges;
    if (2 * m <= pair_count(n)) {
      while (static_cast<long>(edges.size()) < m) {
        const Vertex u = rng.below(n);
        const Vertex v = rng.below(n);
        if (u != v) edges.insert(make_edge(u, v));
      }
    } else {
      add_random_edges(n, m, edges, rng, [](Vertex, Vertex) { return true; });
    }
    Graph g = to_graph(n, edges);
    if (is_connected(g)) return g;
  }
  return tree_plus(n, m, rng);
}

Graph star_cluster(int n, std::optional<long> m, Rng& rng) {
  const int hubs = n >= 6 ? std::max(2, n / 8) : 1;
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);
  std::vector<char> is_hub(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < hubs; ++i) is_hub[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] = 1;

  std::set<Edge> edges;
  for (int i = 1; i < hubs; ++i) {
    edges.insert(make_edge(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(rng.below(i))]));
  }
  for (int i = hubs; i < n; ++i) {
    const Vertex leaf = label[static_cast<std::size_t>(i)];
    edges.insert(make_edge(leaf, label[static_cast<std::size_t>(rng.below(hubs))]));
    if (!m && hubs > 1 && rng.below(8) == 0) {
      edges.insert(make_edge(leaf, label[static_cast<std::size_t>(rng.below(hubs))]));
    }
  }
  if (m) {
    const long max_edges = pair_count(hubs) + static_cast<long>(hubs) * (n - hubs);
    if (*m < n - 1 || *m > max_edges) {
      throw PreconditionError("star-cluster with n = " + std::to_string(n) + " needs " + std::to_string(n - 1) +
                              " <= m <= " + std::to_string(max_edges));
    }
    add_random_edges(n, *m - static_cast<long>(edges.size()), edges, rng, [&is_hub](Vertex u, Vertex v) {
      return is_hub[static_cast<std::size_t>(u)] || is_hub[static_cast<std::size_t>(v)];
    });
  }
  return to_graph(n, edges);
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "random-gnm") return Family::RandomGnm;
  if (name == "tree-plus") return Family::TreePlus;
  if (name == "star-cluster") return Family::StarCluster;
  return std::nullopt;
}

Graph generate_graph(Family family, int n, std::optional<long> m, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("generator needs n >= 1");
  Rng rng(seed);
  if (family == Family::StarCluster) return star_cluster(n, m, rng);
  if (!m) throw PreconditionError("this family needs --m");
  if (*m < n - 1 || *m > pair_count(n)) {
    throw PreconditionError("a connected graph on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                            " <= m <= " + std::to_string(pair_count(n)));
  }
  return family == Family::RandomGnm ? random_gnm(n, *m, rng) : tree_plus(n, *m, rng);
}

}  // namespace mist
