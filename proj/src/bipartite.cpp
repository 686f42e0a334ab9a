#include "mist/bipartite.hpp"

#include <algorithm>
#include <limits>

#include "mist/errors.hpp"

namespace mist {

namespace {

int index_in(const VertexSet& side, Vertex v) {
  const auto it = std::lower_bound(side.begin(), side.end(), v);
  if (it == side.end() || *it != v) return -1;
  return static_cast<int>(it - side.begin());
}

constexpr int kUnreached = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<int>>& adj, int right_count)
      : adj_(adj), mate_l_(adj.size(), -1), mate_r_(static_cast<std::size_t>(right_count), -1), dist_(adj.size()) {}

  Matching run() {
    while (layer()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (mate_l_[u] < 0) augment(static_cast<int>(u));
      }
    }
    return {mate_l_, mate_r_};
  }

 private:
  // BFS layering from free left vertices; true iff an augmenting path exists.
  bool layer() {
    std::vector<int> queue;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (mate_l_[u] < 0) {
        dist_[u] = 0;
        queue.push_back(static_cast<int>(u));
      } else {
        dist_[u] = kUnreached;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int r : adj_[static_cast<std::size_t>(u)]) {
        const int next = mate_r_[static_cast<std::size_t>(r)];
        if (next < 0) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(next)] == kUnreached) {
          dist_[static_cast<std::size_t>(next)] = dist_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  bool augment(int u) {
    for (int r : adj_[static_cast<std::size_t>(u)]) {
      const int next = mate_r_[static_cast<std::size_t>(r)];
      if (next < 0 || (dist_[static_cast<std::size_t>(next)] == dist_[static_cast<std::size_t>(u)] + 1 && augment(next))) {
        mate_l_[static_cast<std::size_t>(u)] = r;
        mate_r_[static_cast<std::size_t>(r)] = u;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(u)] = kUnreached;
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> mate_l_;
  std::vector<int> mate_r_;
  std::vector<int> dist_;
};

}  // namespace

BipartiteSubgraph::BipartiteSubgraph(VertexSet x, VertexSet y, std::span<const std::pair<Vertex, Vertex>> edges)
    : x_(std::move(x)), y_(std::move(y)) {
  std::sort(x_.begin(), x_.end());
  std::sort(y_.begin(), y_.end());
  x_.erase(std::unique(x_.begin(), x_.end()), x_.end());
  y_.erase(std::unique(y_.begin(), y_.end()), y_.end());
  for (Vertex v : x_) {
    if (index_in(y_, v) >= 0) throw PreconditionError("bipartite sides overlap at vertex " + std::to_string(v));
  }
  x_adj_.resize(x_.size());
  y_adj_.resize(y_.size());
  for (const auto& [a, b] : edges) {
    const int i = index_in(x_, a);
    const int j = index_in(y_, b);
    if (i < 0 || j < 0) throw PreconditionError("bipartite edge is not an (X, Y) pair");
    x_adj_[static_cast<std::size_t>(i)].push_back(j);
    y_adj_[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& list : x_adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  for (auto& list : y_adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

int BipartiteSubgraph::x_index(Vertex v) const { return index_in(x_, v); }
int BipartiteSubgraph::y_index(Vertex v) const { return index_in(y_, v); }

std::vector<std::pair<Vertex, Vertex>> BipartiteSubgraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    for (int j : x_adj_[i]) out.emplace_back(x_[i], y_[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::size_t BipartiteSubgraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& list : x_adj_) m += list.size();
  return m;
}

BipartiteSubgraph bipartite_between(const Graph& g, VertexSet x, VertexSet y) {
  std::sort(y.begin(), y.end());
  std::vector<std::pair<Vertex, Vertex>> cross;
  for (Vertex a : x) {
    if (a < 0 || a >= g.vertex_count()) throw PreconditionError("vertex out of range");
    for (Vertex b : g.neighbors(a)) {
      if (std::binary_search(y.begin(), y.end(), b)) cross.emplace_back(a, b);
    }
  }
  for (Vertex b : y) {
    if (b < 0 || b >= g.vertex_count()) throw PreconditionError("vertex out of range");
  }
  return BipartiteSubgraph(std::move(x), std::move(y), cross);
}

int Matching::size() const {
  return static_cast<int>(std::count_if(mate_x.begin(), mate_x.end(), [](int m) { return m >= 0; }));
}

std::vector<std::pair<Vertex, Vertex>> Matching::pairs(const BipartiteSubgraph& b) const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < mate_x.size(); ++i) {
    if (mate_x[i] >= 0) out.emplace_back(b.side_x()[i], b.side_y()[static_cast<std::size_t>(mate_x[i])]);
  }
  return out;
}

Matching maximum_matching(const std::vector<std::vector<int>>& left_adjacency, int right_count) {
  return HopcroftKarp(left_adjacency, right_count).run();
}

Matching max_matching(const BipartiteSubgraph& b) { return maximum_matching(b.x_adjacency(), b.y_size()); }

std::optional<Matching> saturating_matching(const BipartiteSubgraph& b, Side side) {
  Matching m = max_matching(b);
  const int need = side == Side::X ? b.x_size() : b.y_size();
  if (m.size() != need) return std::nullopt;
  return m;
}

}  // namespace mist
