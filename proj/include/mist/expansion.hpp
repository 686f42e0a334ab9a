#pragma once

#include "mist/bipartite.hpp"
#include "mist/graph.hpp"

namespace mist {

/// X' has Y'-expansion 2 and N(Y') = X' inside the host bipartite graph.
struct ExpansionPair {
  VertexSet x_prime;
  VertexSet y_prime;
};

/// Finds an expansion pair in a bipartite graph with |Y| >= 2|X|, X nonempty
/// and no isolated Y-vertex. Throws PreconditionError naming the violated
/// condition otherwise.
///
/// Works on the auxiliary graph with two copies of every X-vertex: a maximum
/// matching either saturates both copies (the whole graph qualifies) or its
/// König cover isolates the X-vertices whose copies are unreachable by
/// alternating paths; those, with the Y-vertices outside the cover, form the
/// pair.
ExpansionPair find_expansion_2(const BipartiteSubgraph& b);

/// Exhaustive check that N(y_prime) = x_prime in `b` and every nonempty
/// Z of x_prime has |N(Z) n y_prime| >= c|Z|. Throws PreconditionError when
/// |x_prime| > 20.
bool verify_expansion(const BipartiteSubgraph& b, const ExpansionPair& p, int c);

}  // namespace mist
