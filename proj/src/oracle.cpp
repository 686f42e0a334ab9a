#include "mist/oracle.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "mist/errors.hpp"
#include "mist/kernel.hpp"

namespace mist {

namespace {

using Mask = std::uint32_t;

// Memory grows as 2^n * n cells of 7 bytes.
constexpr int kHardLimit = 20;

class SubtreeTable {
 public:
  explicit SubtreeTable(const Graph& g)
      : n_(g.vertex_count()),
        full_((Mask{1} << n_) - 1),
        best_(cells(), -1),
        split_(cells(), 0),
        hang_(cells(), -1),
        hang_child_(cells(), -1),
        neighbor_mask_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) neighbor_mask_[static_cast<std::size_t>(v)] |= Mask{1} << w;
    }
    fill();
  }

  // Best internal count of a tree hanging from leaf r, i.e. through its single child.
  int from_leaf(Vertex r) const { return hang_[at(full_ & ~(Mask{1} << r), r)]; }

  void reconstruct_from_leaf(Vertex r, std::vector<Edge>& edges) const {
    const Mask rest = full_ & ~(Mask{1} << r);
    const Vertex c = hang_child_[at(rest, r)];
    edges.push_back(make_edge(r, c));
    reconstruct(rest, c, edges);
  }

 private:
  std::size_t cells() const { return (std::size_t{1} << n_) * static_cast<std::size_t>(n_); }
  std::size_t at(Mask set, Vertex v) const {
    return static_cast<std::size_t>(set) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  bool connected(Mask set) const {
    Mask seen = set & (~set + 1);
    Mask frontier = seen;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = neighbor_mask_[static_cast<std::size_t>(v)] & set & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    return seen == set;
  }

  void fill() {
    for (Mask set = 1; set <= full_; ++set) {
      if (connected(set)) {
        for (Mask vs = set; vs != 0; vs &= vs - 1) {
          const Vertex v = std::countr_zero(vs);
          best_root(set, v);
        }
      }
      // Attach the subtree on `set` below an outside vertex v.
      for (Vertex v = 0; v < n_; ++v) {
        if (set & (Mask{1} << v)) continue;
        for (Mask cs = set & neighbor_mask_[static_cast<std::size_t>(v)]; cs != 0; cs &= cs - 1) {
          const Vertex c = std::countr_zero(cs);
          if (best_[at(set, c)] > hang_[at(set, v)]) {
            hang_[at(set, v)] = best_[at(set, c)];
            hang_child_[at(set, v)] = static_cast<std::int8_t>(c);
          }
        }
      }
      if (set == full_) break;
    }
  }

  void best_root(Mask set, Vertex v) {
    const Mask self = Mask{1} << v;
    if (set == self) {
      best_[at(set, v)] = 0;
      return;
    }
    const Mask rest = set & ~self;
    const Mask low = rest & (~rest + 1);
    const Mask free_bits = rest & ~low;
    // The child subtree holding the lowest remaining vertex, then the rest under v.
    Mask sub = free_bits;
    while (true) {
      const Mask child = sub | low;
      const Mask remaining = set & ~child;
      const int hang = hang_[at(child, v)];
      const int base = best_[at(remaining, v)];
      if (hang >= 0 && base >= 0) {
        const int value = hang + base + (remaining == self ? 1 : 0);
        if (value > best_[at(set, v)]) {
          best_[at(set, v)] = static_cast<std::int8_t>(value);
          split_[at(set, v)] = child;
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & free_bits;
    }
  }

  void reconstruct(Mask set, Vertex v, std::vector<Edge>& edges) const {
    while (set != (Mask{1} << v)) {
      const Mask child = split_[at(set, v)];
      const Vertex c = hang_child_[at(child, v)];
      edges.push_back(make_edge(v, c));
      reconstruct(child, c, edges);
      set &= ~child;
    }
  }

  int n_;
  Mask full_;
  std::vector<std::int8_t> best_;
  std::vector<Mask> split_;
  std::vector<std::int8_t> hang_;
  std::vector<std::int8_t> hang_child_;
  std::vector<Mask> neighbor_mask_;
};

}  // namespace

int oracle_max_n_from_env() {
  const char* raw = std::getenv("MIST_ORACLE_MAX_N");
  if (raw == nullptr) return kDefaultOracleMaxN;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value <= 0) return kDefaultOracleMaxN;
  return value;
}

OptResult opt_internal(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n < 1) throw PreconditionError("opt_internal: empty graph");
  if (n > max_n) {
    throw PreconditionError("opt_internal: " + std::to_string(n) + " vertices exceed the oracle limit of " +
                            std::to_string(max_n));
  }
  if (n > kHardLimit) {
    throw PreconditionError("opt_internal: the subset table supports at most " + std::to_string(kHardLimit) + " vertices");
  }
  if (!is_connected(g)) throw PreconditionError("opt_internal: graph is disconnected");
  if (n == 1) return {0, SpanningTree::over_range(1, {})};

  const SubtreeTable table(g);
  int best = -1;
  Vertex best_leaf = -1;
  for (Vertex r = 0; r < n; ++r) {
    if (table.from_leaf(r) > best) {
      best = table.from_leaf(r);
      best_leaf = r;
    }
  }
  std::vector<Edge> edges;
  table.reconstruct_from_leaf(best_leaf, edges);
  OptResult out{best, SpanningTree::over_range(n, std::move(edges))};
  if (!is_spanning_tree_of(g, out.witness) || out.witness.internal_count() != best) {
    throw InvariantError("opt_internal: witness does not realise the optimum");
  }
  return out;
}

Decision decide_pist(const Graph& g, int k, int max_n) {
  KernelResult kernel = kernelize(g, k);
  Decision out;
  switch (kernel.outcome) {
    case Outcome::Solved:
    case Outcome::TrivialYes:
      out.yes = true;
      out.witness = std::move(kernel.tree);
      break;
    case Outcome::TrivialNo:
      break;
    case Outcome::Kernel: {
      if (kernel.graph.vertex_count() > max_n) {
        throw PreconditionError("decide_pist: kernel has " + std::to_string(kernel.graph.vertex_count()) +
                                " vertices, above the oracle limit of " + std::to_string(max_n));
      }
      const OptResult solved = opt_internal(kernel.graph, max_n);
      if (solved.opt >= kernel.k_prime) {
        out.yes = true;
        out.witness = lift_solution(g, kernel.trace, solved.witness);
      }
      break;
    }
  }
  if (out.yes && (!out.witness || !is_spanning_tree_of(g, *out.witness) || out.witness->internal_count() < k)) {
    throw InvariantError("decide_pist: witness is not a spanning tree with k internal vertices");
  }
  return out;
}

}  // namespace mist
