#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cokernel/generators.hpp"
#include "cokernel/modular_decomposition.hpp"
#include "support/oracles.hpp"

using namespace cokernel;

namespace {

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& xs) { return {xs.begin(), xs.end()}; }

void check_tree(const Graph& g, const MDTree& t) {
  for (const auto& node : t.nodes) {
    ASSERT_TRUE(is_module(g, node.leaves));
    for (int c : node.children) {
      const auto& child = t.node(c);
      if (node.kind == NodeKind::parallel || node.kind == NodeKind::series) {
        EXPECT_NE(child.kind, node.kind);
      }
    }
    if (node.kind == NodeKind::prime) {
      ASSERT_TRUE(node.quotient.has_value());
      EXPECT_EQ(node.quotient->vertex_count(), static_cast<int>(node.children.size()));
    }
  }
  EXPECT_EQ(recompose(t, g.vertex_count()), g);
}

}  // namespace

TEST(IsModule, Examples) {
  const Graph p4 = path_graph(4);
  EXPECT_TRUE(is_module(p4, std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(is_module(p4, std::vector<int>{2}));
  EXPECT_FALSE(is_module(p4, std::vector<int>{1, 2}));
  const Graph two = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_TRUE(is_module(two, std::vector<int>{0, 1, 2}));
}

TEST(ModularDecomposition, RootKinds) {
  const auto e3 = modular_decomposition(Graph(3));
  EXPECT_EQ(e3.root_node().kind, NodeKind::parallel);
  EXPECT_EQ(e3.root_node().children.size(), 3u);
  const auto k3 = modular_decomposition(complete_graph(3));
  EXPECT_EQ(k3.root_node().kind, NodeKind::series);
  const auto p4 = modular_decomposition(path_graph(4));
  EXPECT_EQ(p4.root_node().kind, NodeKind::prime);
  EXPECT_EQ(p4.root_node().children.size(), 4u);
  EXPECT_EQ(*p4.root_node().quotient, path_graph(4));
  EXPECT_THROW(modular_decomposition(Graph(0)), std::invalid_argument);
}

TEST(Cotree, Examples) {
  const auto edge = cotree(complete_graph(2));
  ASSERT_TRUE(std::holds_alternative<MDTree>(edge));
  EXPECT_EQ(std::get<MDTree>(edge).root_node().kind, NodeKind::series);

  const auto p4 = cotree(path_graph(4));
  ASSERT_TRUE(std::holds_alternative<NotACograph>(p4));
  EXPECT_EQ(std::get<NotACograph>(p4).witness, (P4{0, 1, 2, 3}));

  const Graph k2 = complete_graph(2);
  const auto t = cotree(join(disjoint_union(k2, k2), Graph(1)));
  ASSERT_TRUE(std::holds_alternative<MDTree>(t));
  const MDTree& tree = std::get<MDTree>(t);
  EXPECT_EQ(tree.depth(), 3);
  const auto& root = tree.root_node();
  ASSERT_EQ(root.kind, NodeKind::series);
  ASSERT_EQ(root.children.size(), 2u);
  const auto& par = tree.node(root.children[0]);
  EXPECT_EQ(par.kind, NodeKind::parallel);
  EXPECT_EQ(par.leaves, (std::vector<int>{0, 1, 2, 3}));
  for (int c : par.children) EXPECT_EQ(tree.node(c).kind, NodeKind::series);
  EXPECT_EQ(tree.node(root.children[1]).kind, NodeKind::leaf);
}

TEST(StrongModules, TrivialFamilies) {
  const auto prime = as_set(strong_modules(cycle_graph(5)));
  EXPECT_EQ(prime.size(), 6u);
  EXPECT_TRUE(prime.contains({0, 1, 2, 3, 4}));
  const auto edgeless = as_set(strong_modules(Graph(4)));
  EXPECT_EQ(edgeless.size(), 5u);
}

TEST(StrongModules, PrimeQuotientOverComponents) {
  // P4 quotient whose end vertices are replaced by a triangle and an edge
  Graph g(7);
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}};
  for (auto [u, v] : edges) g.add_edge(u, v);
  // 0,1 are twins behind 2; 5,6 twins behind 4
  const auto got = as_set(strong_modules(g));
  EXPECT_EQ(got, oracle::strong_modules(g));
  const auto t = modular_decomposition(g);
  EXPECT_TRUE(t.has_prime());
  check_tree(g, t);
}

TEST(StrongModules, MatchesSubsetOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = trial % 3 == 0 ? random_cograph(rng(), n)
                                   : oracle::random_graph(rng, n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
    ASSERT_EQ(as_set(strong_modules(g)), oracle::strong_modules(g)) << "trial " << trial;
    const auto t = modular_decomposition(g);
    check_tree(g, t);
    ASSERT_EQ(std::holds_alternative<MDTree>(cotree(g)), oracle::is_cograph(g));
    ASSERT_EQ(std::holds_alternative<MDTree>(cotree(g)), is_p4_free(g));
  }
}

TEST(ModularDecomposition, LargerGraphsRecompose) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 40, 0.1 + 0.02 * trial);
    check_tree(g, modular_decomposition(g));
    const Graph c = random_cograph(rng(), 60);
    const auto t = modular_decomposition(c);
    EXPECT_FALSE(t.has_prime());
    check_tree(c, t);
  }
}
