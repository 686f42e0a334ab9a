#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mist/graph.hpp"

namespace mist {

enum class Family {
  RandomGnm,    // uniform G(n, m), resampled until connected, tree-seeded as a fallback
  TreePlus,     // uniform labelled spanning tree plus m - (n - 1) uniform extra edges
  StarCluster,  // hubs joined by a tree, every other vertex attached only to hubs
};

/// Parses "random-gnm", "tree-plus" or "star-cluster".
std::optional<Family> parse_family(std::string_view name);

/// Connected graph determined entirely by (family, n, m, seed). `m` is required
/// for random-gnm and tree-plus; for star-cluster it is optional and adds
/// extra hub-to-leaf edges up to m. Throws PreconditionError on inadmissible
/// parameters.
Graph generate_graph(Family family, int n, std::optional<long> m, std::uint64_t seed);

}  // namespace mist
