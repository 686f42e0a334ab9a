#include <gtest/gtest.h>

#include "mist/errors.hpp"
#include "mist/generate.hpp"
#include "mist/io.hpp"

namespace mist {
namespace {

TEST(ParseFamily, KnownNames) {
  EXPECT_EQ(parse_family("random-gnm"), Family::RandomGnm);
  EXPECT_EQ(parse_family("tree-plus"), Family::TreePlus);
  EXPECT_EQ(parse_family("star-cluster"), Family::StarCluster);
  EXPECT_FALSE(parse_family("grid").has_value());
}

TEST(Generate, Deterministic) {
  EXPECT_EQ(serialize_edge_list(generate_graph(Family::RandomGnm, 10, 12, 7)),
            serialize_edge_list(generate_graph(Family::RandomGnm, 10, 12, 7)));
  EXPECT_NE(serialize_edge_list(generate_graph(Family::RandomGnm, 30, 40, 7)),
            serialize_edge_list(generate_graph(Family::RandomGnm, 30, 40, 8)));
}

TEST(Generate, TreePlusWithNMinusOneEdgesIsATree) {
  const Graph g = generate_graph(Family::TreePlus, 10, 9, 3);
  EXPECT_EQ(g.edge_count(), 9U);
  EXPECT_TRUE(is_connected(g));
}

TEST(Generate, FamiliesAreConnectedWithRequestedSize) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 40);
    const long m = n - 1 + static_cast<long>(seed % 5);
    if (m <= static_cast<long>(n) * (n - 1) / 2) {
      for (Family f : {Family::RandomGnm, Family::TreePlus}) {
        const Graph g = generate_graph(f, n, m, seed);
        EXPECT_EQ(g.vertex_count(), n);
        EXPECT_EQ(static_cast<long>(g.edge_count()), m);
        EXPECT_TRUE(is_connected(g));
      }
    }
    const Graph s = generate_graph(Family::StarCluster, n, std::nullopt, seed);
    EXPECT_EQ(s.vertex_count(), n);
    EXPECT_TRUE(is_connected(s));
  }
}

TEST(Generate, StarClusterLeavesOnlyTouchHubs) {
  const Graph g = generate_graph(Family::StarCluster, 30, std::nullopt, 5);
  EXPECT_TRUE(is_connected(g));
  // At most n/5 vertices have degree above the rest; leaves form an independent set.
  std::vector<Vertex> low;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) <= 2) low.push_back(v);
  }
  EXPECT_GE(low.size(), 20U);
  const Graph dense = generate_graph(Family::StarCluster, 30, 60L, 5);
  EXPECT_EQ(dense.edge_count(), 60U);
  EXPECT_TRUE(is_connected(dense));
}

TEST(Generate, InadmissibleParameters) {
  EXPECT_THROW(generate_graph(Family::RandomGnm, 10, 8, 1), PreconditionError);
  EXPECT_THROW(generate_graph(Family::RandomGnm, 5, 11, 1), PreconditionError);
  EXPECT_THROW(generate_graph(Family::TreePlus, 10, std::nullopt, 1), PreconditionError);
  EXPECT_THROW(generate_graph(Family::TreePlus, 0, 0, 1), PreconditionError);
  EXPECT_THROW(generate_graph(Family::StarCluster, 10, 100L, 1), PreconditionError);
}

}  // namespace
}  // namespace mist
