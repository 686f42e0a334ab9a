#include "mist/verify.hpp"

#include <algorithm>

#include "mist/bipartite.hpp"
#include "mist/errors.hpp"
#include "mist/expansion.hpp"
#include "mist/kernel.hpp"

namespace mist {

namespace {

constexpr std::size_t kBruteForceExpansionLimit = 12;

std::optional<std::string> reduction_violation(const Graph& g, const ReductionRecord& rec) {
  if (auto broken = sl_pair_violation(g, rec.s, rec.l)) return broken;
  VertexSet both;
  std::set_union(rec.s.begin(), rec.s.end(), rec.l.begin(), rec.l.end(), std::back_inserter(both));

  std::optional<SpanningTree> tree;
  try {
    tree.emplace(both, rec.bsl_tree);
  } catch (const PreconditionError&) {
    return "bsl_tree is a spanning tree of S and L";
  }
  if (auto broken = certificate_violation(g, rec.s, rec.l, *tree)) return broken;
  if (rec.s.size() <= kBruteForceExpansionLimit &&
      !verify_expansion(bipartite_between(g, rec.s, rec.l), {rec.s, rec.l}, 2)) {
    return "S has L-expansion 2";
  }
  if (!rec.initial_tree.empty()) {
    try {
      const SpanningTree initial(both, rec.initial_tree);
      for (Vertex w : rec.l) {
        if (initial.degree(w) > 2) return "L-degrees at most 2 before promotion";
      }
    } catch (const PreconditionError&) {
      return "initial_tree is a spanning tree of S and L";
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> trace_violation(const Graph& input, const TraceDocument& trace,
                                           const std::optional<std::string>& kernel_text) {
  if (trace.input_vertices != input.vertex_count() || trace.input_edges != static_cast<int>(input.edge_count())) {
    return "input graph matches the trace header";
  }
  Graph current = input;
  int k = trace.k;
  for (std::size_t i = 0; i < trace.reductions.size(); ++i) {
    const ReductionRecord& rec = trace.reductions[i];
    const std::string where = "reduction " + std::to_string(i) + ": ";
    if (rec.pre_vertex_count != current.vertex_count()) return where + "pre_vertex_count";
    if (rec.k_before != k) return where + "k bookkeeping";
    try {
      if (auto broken = reduction_violation(current, rec)) return where + *broken;
      Graph next = replay_reduction(current, rec);
      if (next.vertex_count() >= current.vertex_count()) return where + "vertex count decreases";
      current = std::move(next);
    } catch (const InvariantError& e) {
      return where + e.what();
    } catch (const PreconditionError& e) {
      return where + e.what();
    }
    k -= rec.delta_k;
  }
  if (trace.k_prime != k) return "k_prime equals k minus the sum of delta_k";

  if (trace.outcome == "kernel") {
    if (!kernel_text) return "kernel file supplied";
    if (*kernel_text != serialize_edge_list(current)) return "kernel reproduction";
    if (trace.kernel_vertices != current.vertex_count()) return "kernel vertex count";
    if (k >= 1 && current.vertex_count() > 3 * k) return "kernel has at most 3k' vertices";
  } else if (trace.outcome == "solved") {
    try {
      const SpanningTree t = SpanningTree::over_range(input.vertex_count(), trace.solved_tree);
      if (!is_spanning_tree_of(input, t)) return "solved tree spans the input";
      if (t.internal_count() < trace.k) return "solved tree has k internal vertices";
    } catch (const PreconditionError&) {
      return "solved tree spans the input";
    }
  } else if (trace.outcome != "trivial_yes" && trace.outcome != "trivial_no") {
    return "known outcome";
  }
  return std::nullopt;
}

}  // namespace mist
