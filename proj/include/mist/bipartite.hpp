#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mist/graph.hpp"

namespace mist {

/// B(X, Y): the cross edges of G[X u Y]. Sides are stored sorted; adjacency is
/// kept in side-local indices (position within side_x / side_y).
class BipartiteSubgraph {
 public:
  BipartiteSubgraph() = default;
  /// `edges` holds (x, y) vertex ids with x in `x` and y in `y`.
  /// Throws PreconditionError if the sides overlap or an edge is not a cross pair.
  BipartiteSubgraph(VertexSet x, VertexSet y, std::span<const std::pair<Vertex, Vertex>> edges);

  const VertexSet& side_x() const { return x_; }
  const VertexSet& side_y() const { return y_; }
  int x_size() const { return static_cast<int>(x_.size()); }
  int y_size() const { return static_cast<int>(y_.size()); }

  /// Local y-indices adjacent to local x-index i (ascending).
  const std::vector<int>& x_adjacency(int i) const { return x_adj_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& y_adjacency(int j) const { return y_adj_[static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& x_adjacency() const { return x_adj_; }

  /// Local index of a vertex id on a side, or -1.
  int x_index(Vertex v) const;
  int y_index(Vertex v) const;

  /// Cross edges as (x, y) vertex ids, ordered by x then y.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::size_t edge_count() const;

 private:
  VertexSet x_;
  VertexSet y_;
  std::vector<std::vector<int>> x_adj_;
  std::vector<std::vector<int>> y_adj_;
};

BipartiteSubgraph bipartite_between(const Graph& g, VertexSet x, VertexSet y);

/// Mate arrays in local indices; -1 marks an unmatched vertex.
struct Matching {
  std::vector<int> mate_x;
  std::vector<int> mate_y;

  int size() const;
  /// Matched pairs as (x, y) vertex ids of `b`.
  std::vector<std::pair<Vertex, Vertex>> pairs(const BipartiteSubgraph& b) const;
};

/// Hopcroft-Karp on a left-adjacency list. Free left vertices are processed
/// in ascending order and neighbours in list order, so the result is
/// deterministic.
Matching maximum_matching(const std::vector<std::vector<int>>& left_adjacency, int right_count);

Matching max_matching(const BipartiteSubgraph& b);

enum class Side { X, Y };

/// A matching covering every vertex of `side`, if one exists.
std::optional<Matching> saturating_matching(const BipartiteSubgraph& b, Side side);

}  // namespace mist
