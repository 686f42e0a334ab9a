#include "mist/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "mist/errors.hpp"

namespace mist {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (const Edge& raw : edges) {
    const Edge e = make_edge(raw.u, raw.v);
    if (e.u < 0 || e.v >= vertex_count) {
      throw PreconditionError("edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) + "} out of range");
    }
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw PreconditionError("parallel edge");
    }
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return false;
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

SpanningTree::SpanningTree(VertexSet vertices, std::vector<Edge> edges, std::optional<Vertex> root)
    : vertices_(std::move(vertices)), root_(root) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw PreconditionError("tree vertex set has duplicates");
  }
  if (vertices_.empty()) throw PreconditionError("tree must span at least one vertex");
  if (vertices_.front() < 0) throw PreconditionError("negative vertex id in tree");
  if (edges.size() + 1 != vertices_.size()) {
    throw PreconditionError("tree on " + std::to_string(vertices_.size()) + " vertices needs " +
                            std::to_string(vertices_.size() - 1) + " edges, got " +
                            std::to_string(edges.size()));
  }
  local_.assign(static_cast<std::size_t>(vertices_.back()) + 1, -1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) local_[static_cast<std::size_t>(vertices_[i])] = static_cast<int>(i);
  if (root_ && local(*root_) < 0) throw PreconditionError("root not in tree");

  adjacency_.resize(vertices_.size());
  DisjointSets components(vertices_.size());
  for (Edge& e : edges) {
    e = make_edge(e.u, e.v);
    const int a = local(e.u);
    const int b = local(e.v);
    if (a < 0 || b < 0) throw PreconditionError("tree edge leaves the vertex set");
    if (a == b) throw PreconditionError("tree edge is a self-loop");
    if (!components.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) {
      throw PreconditionError("tree edges contain a cycle");
    }
    adjacency_[static_cast<std::size_t>(a)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(b)].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

SpanningTree SpanningTree::over_range(int n, std::vector<Edge> edges, std::optional<Vertex> root) {
  VertexSet all(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(all.begin(), all.end(), 0);
  return SpanningTree(std::move(all), std::move(edges), root);
}

int SpanningTree::local(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= local_.size()) return -1;
  return local_[static_cast<std::size_t>(v)];
}

bool SpanningTree::contains(Vertex v) const { return local(v) >= 0; }

std::span<const Vertex> SpanningTree::neighbors(Vertex v) const {
  const int i = local(v);
  if (i < 0) return {};
  return adjacency_[static_cast<std::size_t>(i)];
}

int SpanningTree::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

bool SpanningTree::has_edge(Vertex a, Vertex b) const {
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

int SpanningTree::internal_count() const { return internal_count(vertices_); }

int SpanningTree::internal_count(std::span<const Vertex> subset) const {
  return static_cast<int>(std::count_if(subset.begin(), subset.end(), [this](Vertex v) { return is_internal(v); }));
}

VertexSet SpanningTree::leaves() const {
  VertexSet out;
  for (Vertex v : vertices_) {
    if (degree(v) == 1) out.push_back(v);
  }
  return out;
}

bool is_spanning_tree_of(const Graph& g, const SpanningTree& t) {
  const auto& vs = t.vertices();
  if (static_cast<int>(vs.size()) != g.vertex_count()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] != static_cast<Vertex>(i)) return false;
  }
  return std::all_of(t.edges().begin(), t.edges().end(), [&g](const Edge& e) { return g.adjacent(e.u, e.v); });
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

VertexSet neighborhood(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : set) in_set[static_cast<std::size_t>(v)] = 1;
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : set) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_set[static_cast<std::size_t>(w)]) mark[static_cast<std::size_t>(w)] = 1;
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  for (Vertex v : set) {
    for (Vertex w : set) {
      if (v < w && g.adjacent(v, w)) return false;
    }
  }
  return true;
}

SpanningTree dfs_tree(const Graph& g, Vertex root) {
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("dfs_tree on an empty graph");
  if (root < 0 || root >= n) throw PreconditionError("dfs root out of range");

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Edge> tree;
  tree.reserve(static_cast<std::size_t>(n - 1));
  // (vertex, index of the next neighbour to try); mirrors the recursive visit order.
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  seen[static_cast<std::size_t>(root)] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto nb = g.neighbors(v);
    while (next < nb.size() && seen[static_cast<std::size_t>(nb[next])]) ++next;
    if (next == nb.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = nb[next++];
    seen[static_cast<std::size_t>(w)] = 1;
    tree.push_back(make_edge(v, w));
    stack.emplace_back(w, 0);
  }
  if (static_cast<int>(tree.size()) != n - 1) throw PreconditionError("dfs_tree: graph is disconnected");
  return SpanningTree::over_range(n, std::move(tree), root);
}

VertexSet dfs_leaf_independent_set(const Graph& g, const SpanningTree& t) {
  if (!is_spanning_tree_of(g, t)) throw PreconditionError("dfs_leaf_independent_set: tree does not span the graph");
  VertexSet out;
  for (Vertex v : t.leaves()) {
    if (!t.root() || v != *t.root()) out.push_back(v);
  }
  return out;
}

}  // namespace mist
