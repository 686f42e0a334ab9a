#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mist/graph.hpp"

namespace mist {

/// Sets S (outside the independent set) and L (inside it) with N(L) = S, S
/// having L-expansion 2, and a spanning tree of B(S, L) in which every S-vertex
/// and exactly |S| - 1 L-vertices are internal.
struct SLCertificate {
  VertexSet s;
  VertexSet l;
  SpanningTree tree;
  /// The tree before favourite-edge promotion; every L-vertex has degree <= 2.
  SpanningTree initial_tree;
  int promotions = 0;
};

/// Builds an SLCertificate from an independent set of size >= 2n/3 in a
/// connected graph with n >= 3. Throws PreconditionError on bad input and
/// InvariantError if an intermediate step fails its own postcondition.
SLCertificate find_sl(const Graph& g, std::span<const Vertex> independent);

/// Invariants of the sets alone: nonempty, disjoint, L independent, N(L) = S
/// and L-expansion 2 (through a saturating matching of the doubled S side).
std::optional<std::string> sl_pair_violation(const Graph& g, const VertexSet& s, const VertexSet& l);

/// Name of the first violated certificate invariant, or nullopt.
std::optional<std::string> certificate_violation(const Graph& g, const VertexSet& s, const VertexSet& l,
                                                 const SpanningTree& tree);

/// One application of the S/L replacement. Ids of s, l, neighbor_map and
/// bsl_tree refer to the graph before surgery.
struct ReductionRecord {
  int pre_vertex_count = 0;
  VertexSet s;
  VertexSet l;
  Vertex v_s = -1;
  Vertex v_l = -1;
  VertexSet neighbor_map;         // N(S) \ L: the vertices joined to v_s
  std::vector<Vertex> index_map;  // old id -> new id, -1 for removed vertices
  std::vector<Edge> bsl_tree;
  std::vector<Edge> initial_tree;
  int delta_k = 0;  // 2|S| - 2
  int k_before = 0;
};

struct Surgery {
  Graph graph;
  Vertex v_s = -1;
  Vertex v_l = -1;
  VertexSet neighbor_map;
  std::vector<Vertex> index_map;
};

/// Removes S u L, adds v_s adjacent to N(S) \ L and a pendant v_l on v_s.
/// Survivors keep their relative order; v_s and v_l take the last two ids.
Surgery replace_sl(const Graph& g, const VertexSet& s, const VertexSet& l);

struct Rule3Result {
  Graph graph;
  int k = 0;
  ReductionRecord record;
};

/// Throws PreconditionError if the certificate is invalid or S u L is the
/// whole graph (v_s would then be a leaf and k' would be off by one).
Rule3Result apply_rule3(const Graph& g, int k, const SLCertificate& cert);

enum class Outcome { Solved, Kernel, TrivialYes, TrivialNo };

const char* outcome_name(Outcome o);

struct KernelResult {
  Outcome outcome = Outcome::Kernel;
  Graph graph;  // the kernel when outcome == Kernel
  int k_prime = 0;
  std::vector<ReductionRecord> trace;
  std::optional<SpanningTree> tree;  // witness on the original graph (Solved, TrivialYes)
  std::string reason;
};

/// Per round: a DFS tree with k internal vertices solves, n <= 3k stops with a
/// kernel, otherwise S u L is replaced and the round repeats. When S u L is
/// the whole graph the certificate tree is optimal and decides the instance.
KernelResult kernelize(const Graph& g, int k);

/// Recomputes the surgery described by `rec` on `g` and returns the reduced
/// graph. Throws InvariantError naming the first stored field that disagrees.
Graph replay_reduction(const Graph& g, const ReductionRecord& rec);

/// Graphs before every reduction and after the last one (trace.size() + 1
/// entries).
std::vector<Graph> replay_trace(const Graph& original, std::span<const ReductionRecord> trace);

/// Maps a spanning tree of the final kernel graph back to `original`. The
/// result has at least internal_count(t) + sum of delta_k internal vertices.
SpanningTree lift_solution(const Graph& original, std::span<const ReductionRecord> trace, const SpanningTree& t);

/// Rebuilds `t` around the certificate tree so that every S-vertex and
/// exactly |S| - 1 L-vertices are internal, without losing internal vertices.
SpanningTree rearrange_tree(const Graph& g, const SpanningTree& t, const SLCertificate& cert);

}  // namespace mist
