#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "brute_force.hpp"
#include "mist/errors.hpp"
#include "mist/generate.hpp"
#include "mist/oracle.hpp"

namespace mist {
namespace {

TEST(OptInternal, Examples) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(opt_internal(brute::path_graph(n)).opt, std::max(0, n - 2));
  for (int m = 2; m <= 8; ++m) EXPECT_EQ(opt_internal(brute::star_graph(m)).opt, 1);
  EXPECT_EQ(opt_internal(brute::complete_graph(5)).opt, 3);
  EXPECT_EQ(opt_internal(Graph(1)).opt, 0);
}

TEST(OptInternal, Guards) {
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  EXPECT_THROW(opt_internal(Graph(4, two)), PreconditionError);
  EXPECT_THROW(opt_internal(brute::path_graph(19)), PreconditionError);
  EXPECT_THROW(opt_internal(brute::path_graph(21), 25), PreconditionError);
  EXPECT_EQ(opt_internal(brute::path_graph(19), 19).opt, 17);
}

TEST(OptInternal, AgreesWithSpanningTreeEnumeration) {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = brute::random_connected_graph(n, 0.3, rng);
    const OptResult r = opt_internal(g);
    EXPECT_EQ(r.opt, brute::max_internal(g));
    ASSERT_TRUE(is_spanning_tree_of(g, r.witness));
    EXPECT_EQ(r.witness.internal_count(), r.opt);
    EXPECT_LE(r.opt, std::max(0, n - 2));
  }
}

TEST(OptInternal, HamiltonianPathBoundary) {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 200; ++round) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = brute::random_connected_graph(n, 0.2, rng);
    EXPECT_EQ(opt_internal(g).opt == n - 2, brute::has_hamiltonian_path(g));
  }
}

TEST(DecidePist, Examples) {
  const Decision path = decide_pist(brute::path_graph(6), 4);
  ASSERT_TRUE(path.yes);
  EXPECT_EQ(path.witness->edges(), brute::path_graph(6).edges());
  const Decision star = decide_pist(brute::star_graph(5), 2);
  EXPECT_FALSE(star.yes);
  EXPECT_FALSE(star.witness.has_value());
}

TEST(DecidePist, AgreesWithOracle) {
  std::mt19937_64 rng(79);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = round % 3 ? brute::random_connected_graph(n, 0.15, rng)
                              : generate_graph(Family::StarCluster, n, std::nullopt, rng());
    const int opt = opt_internal(g).opt;
    for (int k = 0; k <= n; ++k) {
      const Decision d = decide_pist(g, k);
      ASSERT_EQ(d.yes, opt >= k) << "n=" << n << " k=" << k;
      if (d.yes) {
        ASSERT_TRUE(is_spanning_tree_of(g, *d.witness));
        EXPECT_GE(d.witness->internal_count(), k);
      }
    }
  }
}

TEST(DecidePist, KernelAboveGuardIsAPreconditionError) {
  // K_{1,5} with k = 2 is its own 6-vertex kernel.
  EXPECT_THROW(decide_pist(brute::star_graph(5), 2, 5), PreconditionError);
  EXPECT_FALSE(decide_pist(brute::star_graph(5), 2, 6).yes);
}

TEST(OracleGuard, EnvironmentOverride) {
  ::unsetenv("MIST_ORACLE_MAX_N");
  EXPECT_EQ(oracle_max_n_from_env(), kDefaultOracleMaxN);
  ::setenv("MIST_ORACLE_MAX_N", "12", 1);
  EXPECT_EQ(oracle_max_n_from_env(), 12);
  ::setenv("MIST_ORACLE_MAX_N", "twelve", 1);
  EXPECT_EQ(oracle_max_n_from_env(), kDefaultOracleMaxN);
  ::unsetenv("MIST_ORACLE_MAX_N");
}

}  // namespace
}  // namespace mist
