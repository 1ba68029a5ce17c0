#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "setgraph/corpus.hpp"
#include "setgraph/generators.hpp"
#include "setgraph/invariants.hpp"
#include "setgraph/partitions.hpp"
#include "setgraph/perfection.hpp"
#include "setgraph/rainbow.hpp"

using namespace setgraph;

TEST(Rainbow, YieldsExamples) {
  const Colouring k4 = Colouring::from_assignment({1, 2, 3, 4});
  for (int v = 0; v < 4; ++v) EXPECT_TRUE(yields_rainbow(complete(4), k4, v));
  EXPECT_TRUE(yields_rainbow(path(4), Colouring::from_assignment({1, 2, 1, 2}), 0));
  const Colouring c5 = Colouring::from_assignment({1, 2, 1, 2, 3});
  EXPECT_FALSE(yields_rainbow(cycle(5), c5, 1));
  EXPECT_THROW(yields_rainbow(path(3), Colouring::from_assignment({1, 1, 2}), 0), std::invalid_argument);
  EXPECT_THROW(yields_rainbow(path(3), Colouring::from_assignment({1, 2, 1}), 3), std::out_of_range);
}

TEST(Rainbow, NumberExamples) {
  for (int n = 2; n <= 8; ++n) {
    const Graph p = path(n);
    for (const Colouring& c : enumerate_chromatic_partitions(p)) EXPECT_EQ(rainbow_number(p, c).r, n);
  }
  for (const Colouring& c : enumerate_chromatic_partitions(cycle(5))) EXPECT_EQ(rainbow_number(cycle(5), c).r, 3);
}

TEST(Rainbow, ConventionColouringOfSetGraphThree) {
  // The convention peeling uses 5 colours here (see the colouring tests); with 5 classes only
  // the four vertices of the residual K4 see every colour.
  const Graph g = set_graph(3).graph;
  const RainbowReport r = rainbow_number(g, convention_colouring(g).colouring);
  EXPECT_EQ(r.colouring.num_colours(), 5);
  EXPECT_EQ(r.r, 4);
  EXPECT_EQ(oracle::rainbow_count(g, r.colouring.assignment(), 5), 4);
}

TEST(RainbowBounds, Examples) {
  for (int n = 1; n <= 6; ++n) {
    const RainbowBounds b = rainbow_bounds(null_graph(n));
    EXPECT_EQ(b.r_minus, n);
    EXPECT_EQ(b.r_plus, n);
  }
  const RainbowBounds p3 = rainbow_bounds(set_graph(2).graph);
  EXPECT_EQ(p3.r_minus, 3);
  EXPECT_EQ(p3.r_plus, 3);
  const RainbowBounds c5 = rainbow_bounds(cycle(5));
  EXPECT_EQ(c5.r_minus, 3);
  EXPECT_EQ(c5.r_plus, 3);
  EXPECT_TRUE(c5.exact);
  const RainbowBounds s3 = rainbow_bounds(set_graph(3).graph);
  EXPECT_EQ(s3.r_minus, 7);
  EXPECT_EQ(s3.r_plus, 7);
}

TEST(RainbowBounds, MatchPartitionOracle) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    const Graph g = oracle::random_graph(2 + k % 6, 0.45, rng);
    const int chi = oracle::chi(g);
    int lo = g.order(), hi = 0;
    for (const auto& colours : oracle::partitions_into(g, chi)) {
      const int r = oracle::rainbow_count(g, colours, chi);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    const RainbowBounds b = rainbow_bounds(g);
    ASSERT_EQ(b.r_minus, lo);
    ASSERT_EQ(b.r_plus, hi);
  }
}

TEST(RainbowBounds, TruncationIsFlagged) {
  const RainbowBounds b = rainbow_bounds(cycle(9), 2);
  EXPECT_FALSE(b.exact);
  EXPECT_EQ(b.partitions_scanned, 2u);
}

TEST(RImax, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(r_imax(complete(n)).r, n);
  // P4 imax colouring {0,3} / {1} / {2}: only 1 and 2 see all three colours.
  const RainbowReport p4 = r_imax(path(4));
  EXPECT_EQ(p4.colouring.class_masks(), (std::vector<Mask>{0b1001, 0b0010, 0b0100}));
  EXPECT_EQ(p4.r, 2);
  // set_graph(3): singletons colour 1, the K4 one colour each; the K4 vertices see everything,
  // a singleton {a} misses the doubleton that avoids a.
  EXPECT_EQ(r_imax(set_graph(3).graph).r, 4);
}

TEST(Perfection, WeakPerfection) {
  EXPECT_FALSE(is_weakly_perfect(cycle(5)));
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_weakly_perfect(set_graph(n).graph));
  EXPECT_TRUE(is_weakly_perfect(path(6)));
  EXPECT_TRUE(is_weakly_perfect(cycle(8)));
}

TEST(Perfection, BruteForce) {
  const auto c5 = is_perfect_bruteforce(cycle(5));
  ASSERT_TRUE(c5);
  EXPECT_FALSE(c5->perfect);
  EXPECT_EQ(c5->witness, VertexSet(0b11111));
  EXPECT_TRUE(is_perfect_bruteforce(cycle(6))->perfect);
  EXPECT_TRUE(is_perfect_bruteforce(set_graph(4).graph)->perfect);
  EXPECT_FALSE(is_perfect_bruteforce(path(16)).has_value());
}

TEST(Perfection, HoleBased) {
  const PerfectionVerdict c7 = is_perfect_hole_based(cycle(7));
  EXPECT_FALSE(c7.perfect);
  EXPECT_EQ(c7.witness, VertexSet(0b1111111));
  EXPECT_FALSE(c7.antihole);
  const PerfectionVerdict anti = is_perfect_hole_based(complement(cycle(7)));
  EXPECT_FALSE(anti.perfect);
  EXPECT_TRUE(anti.antihole);
  EXPECT_TRUE(is_perfect_hole_based(path(10)).perfect);
  EXPECT_TRUE(is_perfect_hole_based(complete_thorn(path(6), ThornSpec::uniform(6))).perfect);
  EXPECT_FALSE(find_odd_hole(cycle(4)).has_value());
}

// Perfection stops at n = 5: the pairs {1,2}, {2,3}, {3,4}, {4,5}, {5,1} induce a 5-hole.
TEST(Perfection, SetGraphFiveHasFiveHole) {
  const SetGraph sg = set_graph(5);
  const PerfectionVerdict v = is_perfect_hole_based(sg.graph);
  EXPECT_FALSE(v.perfect);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(popcount(v.witness->mask()) % 2, 1);
  const Graph hole = induced_subgraph(sg.graph, *v.witness);
  EXPECT_EQ(hole.order(), 5);
  EXPECT_EQ(oracle::chi(hole), 3);
  EXPECT_EQ(oracle::omega(hole), 2);
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_perfect_hole_based(set_graph(n).graph).perfect) << n;
}

TEST(Perfection, OddHoleSearchMatchesSubsetOracle) {
  for (int n = 5; n <= 6; ++n)
    for (std::uint64_t m = 0; m < labelled_graph_count(n); m += (n == 6 ? 3 : 1)) {
      const Graph g = labelled_graph(n, m);
      ASSERT_EQ(find_odd_hole(g).has_value(), oracle::has_odd_hole(g)) << n << " " << m;
    }
}

TEST(Perfection, CheckersMatchOracleOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t m = 0; m < labelled_graph_count(n); ++m) {
      const Graph g = labelled_graph(n, m);
      const bool truth = oracle::perfect(g);
      ASSERT_EQ(is_perfect_bruteforce(g)->perfect, truth);
      ASSERT_EQ(is_perfect_hole_based(g).perfect, truth);
    }
}

TEST(Coverage, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(every_vertex_in_maximum_clique(complete(n)).covered);
  EXPECT_TRUE(every_vertex_in_maximum_clique(path(3)).covered);
  EXPECT_TRUE(every_vertex_in_maximum_clique(set_graph(3).graph).covered);
  const CoverageVerdict lollipop = every_vertex_in_maximum_clique(Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  EXPECT_FALSE(lollipop.covered);
  EXPECT_EQ(lollipop.uncovered_vertex, 3);
}

TEST(Coverage, MatchesCliqueOracle) {
  for (std::uint64_t m = 0; m < labelled_graph_count(5); ++m) {
    const Graph g = labelled_graph(5, m);
    std::uint64_t covered = 0;
    for (auto s : oracle::maximum_subsets(g, oracle::all(g), oracle::is_clique)) covered |= s;
    ASSERT_EQ(every_vertex_in_maximum_clique(g).covered, covered == oracle::all(g));
  }
}
