#include <gtest/gtest.h>

#include <random>

#include "cokernel/generators.hpp"
#include "cokernel/solver.hpp"
#include "support/oracles.hpp"

using namespace cokernel;

TEST(Solve, SmallExamples) {
  for (Variant v : {Variant::deletion, Variant::completion, Variant::edition}) {
    const auto s = solve({path_graph(4), 1, v});
    ASSERT_TRUE(s.found) << to_string(v);
    EXPECT_EQ(s.edits.size(), 1u);
    EXPECT_TRUE(verify_solution(path_graph(4), s.edits, 1));
    EXPECT_FALSE(solve({path_graph(4), 0, v}).found);

    const auto e = solve({Graph(5), 0, v});
    ASSERT_TRUE(e.found);
    EXPECT_EQ(e.edits.size(), 0u);
  }
  EXPECT_FALSE(solve({cycle_graph(5), 1, Variant::deletion}).found);
  const auto c5 = solve({cycle_graph(5), 2, Variant::deletion});
  ASSERT_TRUE(c5.found);
  EXPECT_EQ(c5.edits.size(), 2u);
}

TEST(Solve, DeletionOnP4TouchesOnlyEdges) {
  const auto s = solve({path_graph(4), 1, Variant::deletion});
  ASSERT_TRUE(s.found);
  for (const auto& p : s.edits.pairs) EXPECT_TRUE(path_graph(4).has_edge(p.u, p.v));
  const auto c = solve({path_graph(4), 1, Variant::completion});
  ASSERT_TRUE(c.found);
  for (const auto& p : c.edits.pairs) EXPECT_FALSE(path_graph(4).has_edge(p.u, p.v));
}

TEST(Solve, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Variant v = static_cast<Variant>(trial % 3);
    const int n = 4 + static_cast<int>(rng() % 5);
    const int k = static_cast<int>(rng() % 4);
    const Graph g = trial % 4 == 0 ? oracle::planted(rng, n, k, v).graph : oracle::random_graph(rng, n, 0.5);
    const auto best = brute_force_optimal(g, v, k);
    const bool yes = best.has_value();
    for (bool kern : {true, false}) {
      const auto s = solve({g, k, v}, {kern});
      ASSERT_EQ(s.found, yes) << "trial " << trial;
      if (!yes) continue;
      EXPECT_EQ(static_cast<int>(s.edits.size()), best->size);
      EXPECT_EQ(s.edits.variant, v);
      EXPECT_TRUE(verify_solution(g, s.edits, k));
    }
  }
}

TEST(Solve, CompletionIsDeletionOnComplement) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, 7, 0.55);
    const int k = static_cast<int>(rng() % 4);
    const auto c = solve({g, k, Variant::completion});
    const auto d = solve({complement(g), k, Variant::deletion});
    ASSERT_EQ(c.found, d.found);
    EXPECT_EQ(c.edits.size(), d.edits.size());
  }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_optimal(cycle_graph(5), Variant::deletion)->size, 2);
  EXPECT_EQ(brute_force_optimal(cycle_graph(5), Variant::completion)->size, 2);
  EXPECT_EQ(brute_force_optimal(complete_graph(5), Variant::edition)->size, 0);
  EXPECT_FALSE(brute_force_optimal(cycle_graph(5), Variant::deletion, 1).has_value());
  std::mt19937_64 rng(1);
  EXPECT_THROW(brute_force_optimal(oracle::random_graph(rng, 10, 0.9), Variant::deletion), OracleTooLarge);
}

TEST(VerifySolution, RejectsBadCertificates) {
  const Graph g = cycle_graph(5);
  EXPECT_TRUE(verify_solution(g, {Variant::deletion, {{0, 1}, {2, 3}}}, 2));
  EXPECT_FALSE(verify_solution(g, {Variant::deletion, {{0, 1}, {2, 3}}}, 1));
  EXPECT_FALSE(verify_solution(g, {Variant::deletion, {{0, 1}, {1, 2}}}, 2));
  EXPECT_FALSE(verify_solution(g, {Variant::deletion, {{0, 2}}}, 2));
}
