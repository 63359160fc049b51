#include <gtest/gtest.h>

#include <random>

#include "cokernel/generators.hpp"
#include "cokernel/kernelizer.hpp"
#include "cokernel/modular_decomposition.hpp"
#include "cokernel/solver.hpp"
#include "support/oracles.hpp"

using namespace cokernel;

namespace {

int optimum(const Graph& g, Variant v) { return brute_force_optimal(g, v, 6).value().size; }

// b1-a1-x-y and b2-a2-x-y share only xy; a1 also sees a2 and b2 so that no
// other edge carries two such P4s.
Graph book() {
  return Graph(6, {{0, 1}, {2, 3}, {2, 4}, {2, 5}, {2, 0}, {4, 5}, {4, 0}});
}

}  // namespace

TEST(Rule1, RemovesCographComponents) {
  const auto step = rule1({disjoint_union(path_graph(4), complete_graph(3)), 1, Variant::deletion});
  ASSERT_TRUE(step);
  EXPECT_EQ(step->instance.graph, path_graph(4));
  EXPECT_EQ(step->application.vertices, (std::vector<int>{4, 5, 6}));
  EXPECT_EQ(step->instance.k, 1);
  EXPECT_FALSE(rule1({path_graph(4), 1, Variant::deletion}));
  EXPECT_FALSE(rule1({disjoint_union(cycle_graph(5), cycle_graph(5)), 1, Variant::deletion}));
}

TEST(Rule2, SplitsSeriesComponent) {
  const auto step = rule2({join(complete_graph(2), path_graph(4)), 1, Variant::deletion});
  ASSERT_TRUE(step);
  // first child of the series root is {0}: K2 itself is split into two
  // series children, so G1 = {0}
  EXPECT_EQ(step->application.vertices, std::vector<int>{0});
  EXPECT_EQ(step->instance.graph.vertex_count(), 6);
  EXPECT_EQ(connected_components(step->instance.graph).size(), 2u);
  EXPECT_FALSE(rule2({cycle_graph(5), 1, Variant::deletion}));

  const auto k3 = rule2({complete_graph(3), 0, Variant::deletion});
  ASSERT_TRUE(k3);
  EXPECT_EQ(k3->instance.graph, Graph(3, {{1, 2}}));
}

TEST(Rule2, JoinOfEdgeAndP4EndsAsUnion) {
  ModInstance cur{join(complete_graph(2), path_graph(4)), 1, Variant::deletion};
  while (auto step = rule2(cur)) cur = step->instance;
  EXPECT_EQ(cur.graph, disjoint_union(Graph(2), path_graph(4)));
}

TEST(Rule3, ShrinksCliqueModule) {
  // P4 quotient a-b-c-d with a blown up into a triangle {0,1,2}
  Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  const ModInstance inst{g, 1, Variant::deletion};
  const auto step = rule3(inst);
  ASSERT_TRUE(step);
  EXPECT_EQ(step->application.vertices, (std::vector<int>{0, 1, 2}));
  const Graph& h = step->instance.graph;
  ASSERT_EQ(h.vertex_count(), 8);
  EXPECT_FALSE(h.has_edge(0, 1));
  EXPECT_TRUE(h.has_edge(0, 2) && h.has_edge(1, 2));  // old vertex 3 is now 2
  EXPECT_TRUE(h.has_edge(5, 6) && h.has_edge(6, 7) && h.has_edge(5, 7));
  EXPECT_EQ(optimum(g, Variant::deletion), optimum(h, Variant::deletion));
}

TEST(Rule3, SmallIndependentModuleStays) {
  Graph g(6, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_FALSE(rule3({g, 2, Variant::deletion}));
}

TEST(Rule3, LargeIndependentModuleShrinks) {
  Graph g(8);
  for (int v = 0; v < 5; ++v) g.add_edge(v, 5);
  g.add_edge(5, 6);
  g.add_edge(6, 7);
  const auto step = rule3({g, 1, Variant::deletion});
  ASSERT_TRUE(step);
  EXPECT_EQ(step->instance.graph.vertex_count(), 3 + 2 + 5);
  EXPECT_EQ(step->instance.graph.edge_count(), 2u + 2u);
  EXPECT_EQ(optimum(g, Variant::deletion), optimum(step->instance.graph, Variant::deletion));
}

TEST(Rule4, FiresOnSingleP4WithZeroBudget) {
  const auto step = rule4_sunflower_deletion({path_graph(4), 0, Variant::deletion});
  ASSERT_TRUE(step);
  EXPECT_EQ(step->instance.k, -1);
  const auto r = kernelize({path_graph(4), 0, Variant::deletion});
  EXPECT_EQ(r.verdict, Verdict::no);
  EXPECT_EQ(r.instance, canonical_no(Variant::deletion));
}

TEST(Rule4, BookDeletesSpine) {
  const Graph g = book();
  EXPECT_EQ(edge_sunflower_size(g, {0, 1}, 10), 2);
  for (const auto& e : g.edges()) {
    if (e == VertexPair{0, 1}) continue;
    EXPECT_LT(edge_sunflower_size(g, e, 10), 2) << e.u << " " << e.v;
  }
  const auto step = rule4_sunflower_deletion({g, 1, Variant::deletion});
  ASSERT_TRUE(step);
  EXPECT_EQ(step->application.pairs, (std::vector<VertexPair>{{0, 1}}));
  EXPECT_EQ(step->instance.k, 0);
  EXPECT_TRUE(is_p4_free(step->instance.graph));
  EXPECT_EQ(optimum(g, Variant::deletion), 1);
}

TEST(Rule4, C5StaysAtBudgetTwo) {
  EXPECT_FALSE(rule4_sunflower_deletion({cycle_graph(5), 2, Variant::deletion}));
  EXPECT_FALSE(rule4_sunflower_deletion({path_graph(4), 0, Variant::edition}));
}

TEST(Rule5, FiresOnP4) {
  const auto step = rule5_sunflower_edition({path_graph(4), 0, Variant::edition});
  ASSERT_TRUE(step);
  EXPECT_EQ(step->instance.k, -1);
}

TEST(Rule5, BookAndComplement) {
  for (const Graph& g : {book(), complement(book())}) {
    EXPECT_EQ(pair_sunflower_size(g, {0, 1}), 2);
    const auto step = rule5_sunflower_edition({g, 1, Variant::edition});
    ASSERT_TRUE(step);
    EXPECT_EQ(step->instance.k, 0);
    const VertexPair p = step->application.pairs.front();
    EXPECT_GE(pair_sunflower_size(g, p), 2);
    EXPECT_EQ(optimum(step->instance.graph, Variant::edition), optimum(g, Variant::edition) - 1);
  }
}

TEST(Rule5, SilentOnCographs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i)
    EXPECT_FALSE(rule5_sunflower_edition({random_cograph(rng(), 12), 0, Variant::edition}));
}

TEST(KernelBound, Values) {
  EXPECT_EQ(kernel_bound(0), 0);
  EXPECT_EQ(kernel_bound(1), 39);
  EXPECT_EQ(kernel_bound(2), 166);
  EXPECT_EQ(kernel_bound(3), 429);
  EXPECT_EQ(kernel_bound(4), 876);
}

TEST(Kernelize, CographGivesCanonicalYes) {
  for (Variant v : {Variant::deletion, Variant::completion, Variant::edition}) {
    const auto r = kernelize({random_cograph(17, 25), 2, v});
    EXPECT_EQ(r.verdict, Verdict::yes);
    EXPECT_EQ(r.instance, canonical_yes(2, v));
  }
}

TEST(Kernelize, P4WithBudgetOne) {
  const auto r = kernelize({path_graph(4), 1, Variant::deletion});
  EXPECT_NE(r.verdict, Verdict::no);
  if (r.verdict == Verdict::undecided) {
    EXPECT_LE(optimum(r.instance.graph, Variant::deletion), r.instance.k);
  }
}

TEST(Kernelize, NegativeBudgetIsNo) {
  EXPECT_EQ(kernelize({Graph(3), -1, Variant::edition}).verdict, Verdict::no);
}

TEST(Kernelize, TraceBudgetsAndReducedStructure) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Variant v = static_cast<Variant>(trial % 3);
    const int k = static_cast<int>(rng() % 4);
    const Graph g = trial % 2 ? oracle::random_graph(rng, 10, 0.4) : oracle::planted(rng, 12, k, v).graph;
    const auto r = kernelize({g, k, v});
    int budget = k;
    int sunflowers = 0;
    int splits = 0;  // R2/R3 since the last sunflower firing
    for (const auto& a : r.trace) {
      EXPECT_EQ(a.k_before, budget);
      const bool decrements = a.rule == RuleId::r4 || a.rule == RuleId::r5;
      EXPECT_EQ(a.k_after, decrements ? budget - 1 : budget);
      sunflowers += decrements;
      budget = a.k_after;
      if (decrements) {
        splits = 0;
      } else if (a.rule != RuleId::r1) {
        EXPECT_LE(++splits, g.vertex_count());
      }
    }
    EXPECT_LE(sunflowers, k + 1);
    if (r.verdict != Verdict::undecided) continue;
    // every non-trivial strong module strictly inside a component is a
    // small independent set
    const Graph& h = r.instance.variant == Variant::completion ? complement(r.instance.graph) : r.instance.graph;
    for (const auto& comp : connected_components(h)) {
      const auto sub = induced_subgraph(h, comp);
      const auto t = modular_decomposition(sub.graph);
      EXPECT_EQ(t.root_node().kind, NodeKind::prime);
      for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& node = t.nodes[i];
        if (static_cast<int>(i) == t.root || node.leaves.size() < 2) continue;
        EXPECT_EQ(node.kind, NodeKind::parallel);
        EXPECT_LE(node.leaves.size(), static_cast<std::size_t>(r.instance.k) + 1);
      }
    }
  }
}

TEST(Kernelize, CompletionMatchesDeletionOnComplement) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 9, 0.6);
    const int k = static_cast<int>(rng() % 3);
    const auto c = kernelize({g, k, Variant::completion});
    const auto d = kernelize({complement(g), k, Variant::deletion});
    EXPECT_EQ(c.verdict, d.verdict);
    EXPECT_EQ(c.instance.graph, complement(d.instance.graph));
    EXPECT_EQ(c.instance.k, d.instance.k);
  }
}
