#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "setgraph/corpus.hpp"
#include "setgraph/errors.hpp"
#include "setgraph/generators.hpp"
#include "setgraph/invariants.hpp"

using namespace setgraph;

TEST(Cliques, CompleteGraphs) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(clique_number(complete(n)), n);
    EXPECT_EQ(count_maximum_cliques(complete(n)), 1u);
  }
}

TEST(Cliques, SetGraphThree) {
  const Graph g = set_graph(3).graph;
  EXPECT_EQ(clique_number(g), 4);
  EXPECT_EQ(count_maximum_cliques(g), 4u);
  EXPECT_EQ(oracle::max_clique_count(g), 4u);
}

// The count 2^(n-1) = 8 does not hold at n = 4. Besides the four stars {S : a in S}
// there are eight cliques made of the five sets of size >= 3 plus three pairwise
// meeting pairs (a triangle ab, ac, bc or a star ab, ac, ad). The power-set oracle
// confirms the solver.
TEST(Cliques, SetGraphFourHasTwelveMaximumCliques) {
  const Graph g = set_graph(4).graph;
  EXPECT_EQ(clique_number(g), 8);
  EXPECT_EQ(oracle::omega(g), 8);
  EXPECT_EQ(oracle::max_clique_count(g), 12u);
  EXPECT_EQ(count_maximum_cliques(g), 12u);
  EXPECT_EQ(maximum_cliques(g).size(), 12u);
}

TEST(Cliques, MatchPowerSetOracle) {
  for (int n = 0; n <= 6; ++n)
    for (std::uint64_t m = 0; m < labelled_graph_count(n); m += (n == 6 ? 7 : 1)) {
      const Graph g = labelled_graph(n, m);
      if (n == 0) continue;
      ASSERT_EQ(clique_number(g), oracle::omega(g));
      ASSERT_EQ(count_maximum_cliques(g), oracle::max_clique_count(g));
    }
}

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number(null_graph(6)), 6);
  EXPECT_EQ(independence_number(set_graph(4).graph), 4);
  EXPECT_EQ(independence_number(cycle(5)), 2);
  EXPECT_EQ(independence_number(complement(set_graph(4).graph)), clique_number(set_graph(4).graph));
}

TEST(Independence, EnumerationExamples) {
  auto masks = [](const std::vector<VertexSet>& sets) {
    std::vector<Mask> out;
    for (auto s : sets) out.push_back(s.mask());
    return out;
  };
  EXPECT_EQ(masks(enumerate_maximum_independent_sets(path(4))), (std::vector<Mask>{0b0101, 0b1001, 0b1010}));
  EXPECT_EQ(masks(enumerate_maximum_independent_sets(cycle(4))), (std::vector<Mask>{0b0101, 0b1010}));
  const SetGraph sg = set_graph(3);
  const auto sets = enumerate_maximum_independent_sets(sg.graph);
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(sets[0], VertexSet({sg.vertex(1, 1), sg.vertex(1, 2), sg.vertex(1, 3)}));
}

TEST(Independence, EnumerationMatchesPowerSetFilterUpToOrderSix) {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t m = 0; m < labelled_graph_count(n); ++m) {
      const Graph g = labelled_graph(n, m);
      std::vector<Mask> got;
      for (auto s : enumerate_maximum_independent_sets(g)) got.push_back(s.mask());
      ASSERT_EQ(got, oracle::maximum_independent_sets(g)) << n << " " << m;
    }
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(Graph()), 0);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(chromatic_number(complete(n)), n);
  const int expected[] = {1, 2, 4, 8};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(chromatic_number(set_graph(n).graph), expected[n - 1]);
  EXPECT_EQ(chromatic_number(empty_sun(5)), 3);
  EXPECT_EQ(chromatic_number(cycle(7)), 3);
  EXPECT_EQ(chromatic_number(cycle(8)), 2);
}

TEST(Chromatic, MatchesColourabilityOracleOnAllGraphsUpToOrderFive) {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t m = 0; m < labelled_graph_count(n); ++m) {
      const Graph g = labelled_graph(n, m);
      ASSERT_EQ(chromatic_number(g), oracle::chi(g)) << n << " " << m;
    }
}

TEST(Chromatic, BranchAndBoundAgreesWithTable) {
  std::mt19937_64 rng(99);
  ChromaticOptions force_search;
  force_search.table_order_limit = 0;
  for (int k = 0; k < 300; ++k) {
    const int n = 6 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(n, 0.3 + 0.4 * (k % 3) / 2.0, rng);
    ASSERT_EQ(chromatic_number(g, force_search), chromatic_number(g)) << g.order();
  }
}

TEST(Chromatic, LargeGraphsUseBranchAndBound) {
  EXPECT_EQ(chromatic_number(set_graph(5).graph), 16);
  EXPECT_EQ(chromatic_number(thorn_complete(9, ThornSpec::ascending(9))), 9);
  EXPECT_EQ(chromatic_number(cycle(41)), 3);
}

TEST(Chromatic, BudgetIsReportedNotGuessed) {
  // Grötzsch graph: triangle-free with chi 4, so the clique bound is loose.
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(5 + i, (i + 1) % 5);
    e.emplace_back(5 + i, (i + 4) % 5);
    e.emplace_back(5 + i, 10);
  }
  const Graph g = Graph::from_edges(11, e);
  ChromaticOptions tiny;
  tiny.table_order_limit = 0;
  tiny.node_budget = 3;
  EXPECT_THROW(chromatic_number(g, tiny), BudgetExceeded);
  EXPECT_EQ(chromatic_number(g), 4);
}

TEST(Degrees, Examples) {
  EXPECT_EQ(min_degree(complete(5)), 4);
  EXPECT_EQ(min_degree(thorn_complete(4, ThornSpec::ascending(4))), 1);
  EXPECT_EQ(min_degree(set_graph(3).graph), 3);
  EXPECT_THROW(min_degree(Graph()), std::invalid_argument);
}

TEST(Report, SetGraphThree) {
  const InvariantReport r = invariant_report(set_graph(3).graph);
  EXPECT_EQ(r.order, 7);
  EXPECT_EQ(r.size, 15u);
  EXPECT_EQ(r.omega, 4);
  EXPECT_EQ(r.alpha, 3);
  EXPECT_EQ(r.chi, 4);
  EXPECT_EQ(r.max_independent_set_count, 1u);
}
