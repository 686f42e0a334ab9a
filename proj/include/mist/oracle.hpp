#pragma once

#include <optional>

#include "mist/graph.hpp"

namespace mist {

inline constexpr int kDefaultOracleMaxN = 18;

/// Oracle size guard: MIST_ORACLE_MAX_N when set to a positive integer,
/// otherwise kDefaultOracleMaxN.
int oracle_max_n_from_env();

struct OptResult {
  int opt = 0;
  SpanningTree witness;
};

/// Exact maximum number of internal vertices over all spanning trees.
///
/// Subset dynamic programming over rooted subtrees: best[A][v] is the largest
/// internal count of a tree spanning A, rooted at v, where v counts as internal
/// once it has a child (it always has a parent above it). Every tree of
/// G with n >= 2 hangs from one of its leaves, which gives the answer.
/// O(3^n n^2) time, O(2^n n) memory.
OptResult opt_internal(const Graph& g, int max_n = kDefaultOracleMaxN);

struct Decision {
  bool yes = false;
  std::optional<SpanningTree> witness;  // spanning tree of the input with >= k internal vertices
};

/// Kernelizes, solves the kernel exactly and lifts the witness back.
Decision decide_pist(const Graph& g, int k, int max_n = kDefaultOracleMaxN);

}  // namespace mist
