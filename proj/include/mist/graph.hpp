#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mist {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws PreconditionError on self-loops, parallel edges or out-of-range ids.
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A spanning tree of an explicit vertex set (not necessarily 0..n-1).
/// Construction validates that the edges form a tree on exactly that set.
class SpanningTree {
 public:
  SpanningTree() = default;
  SpanningTree(VertexSet vertices, std::vector<Edge> edges, std::optional<Vertex> root = std::nullopt);

  /// Tree spanning 0..n-1.
  static SpanningTree over_range(int n, std::vector<Edge> edges, std::optional<Vertex> root = std::nullopt);

  const VertexSet& vertices() const { return vertices_; }
  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<Vertex> root() const { return root_; }

  bool contains(Vertex v) const;
  int degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  bool is_internal(Vertex v) const { return degree(v) >= 2; }

  /// Number of internal vertices (degree >= 2).
  int internal_count() const;
  /// Number of vertices of `subset` that are internal; vertices outside the tree count as not internal.
  int internal_count(std::span<const Vertex> subset) const;
  VertexSet leaves() const;

 private:
  int local(Vertex v) const;

  VertexSet vertices_;
  std::vector<Edge> edges_;
  std::optional<Vertex> root_;
  std::vector<int> local_;  // vertex id -> position in vertices_, or -1
  std::vector<std::vector<Vertex>> adjacency_;
};

/// True iff `t` spans exactly 0..n-1 of `g` and uses only edges of `g`.
bool is_spanning_tree_of(const Graph& g, const SpanningTree& t);

bool is_connected(const Graph& g);

/// Open neighborhood of a set: union of N(v) minus the set itself.
VertexSet neighborhood(const Graph& g, std::span<const Vertex> set);

bool is_independent(const Graph& g, std::span<const Vertex> set);

/// DFS spanning tree visiting neighbours in ascending order. Throws
/// PreconditionError if `g` is disconnected or empty.
SpanningTree dfs_tree(const Graph& g, Vertex root);

/// Leaves of a DFS tree other than its root; an independent set of `g`.
VertexSet dfs_leaf_independent_set(const Graph& g, const SpanningTree& t);

}  // namespace mist
