#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mist/graph.hpp"

namespace mist {

/// Hypergraph on vertices 0..n-1. Each hyperedge is a sorted, duplicate-free,
/// nonempty vertex set; its id is its position in `edges()`.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int vertex_count, std::vector<VertexSet> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const VertexSet& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  const std::vector<VertexSet>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// Disjoint nonempty parts covering 0..n-1.
struct Partition {
  std::vector<VertexSet> parts;
};

/// Throws PreconditionError unless `p` partitions 0..n-1 into nonempty parts.
void validate_partition(const Partition& p, int n);

struct Hyperforest {
  std::vector<int> edge_ids;  // ascending
};

/// Strong Hall condition on explicit sets: |union F'| >= |F'| + 1 for every
/// nonempty F'. Decided by one bipartite matching per vertex of the union.
bool satisfies_strong_hall(int vertex_count, std::span<const VertexSet> sets);

bool is_hyperforest(const Hypergraph& h, std::span<const int> edge_ids);

/// Greedy basis of the hypergraphic matroid, scanning edge ids in ascending
/// order. Returns a hypertree (n-1 edges) or nullopt if none exists.
std::optional<Hyperforest> greedy_hypertree(const Hypergraph& h);

/// Size of a greedy basis of the hypergraphic matroid (its rank).
int hyperforest_rank(const Hypergraph& h);

bool is_partition_connected(const Hypergraph& h);

struct ShrunkTree {
  SpanningTree tree;
  std::vector<std::pair<int, Edge>> edge_map;  // (hyperedge id, the 2-subset it shrank to), by id
};

/// Shrinks every hyperedge of a hypertree to a 2-subset so that the result is
/// a spanning tree. Throws PreconditionError if `t` is not a hypertree of `h`.
ShrunkTree shrink_to_tree(const Hypergraph& h, const Hyperforest& t);

/// Hyperedges meeting at least two parts.
std::vector<int> border(const Hypergraph& h, const Partition& p);

/// A partition P with |border(P)| <= |P| - 2, or nullopt if `h` is
/// partition-connected. Found by contracting vertex pairs while the contracted
/// hypergraph stays non-partition-connected.
std::optional<Partition> deficient_partition(const Hypergraph& h);

}  // namespace mist
