#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "setgraph/colourings.hpp"
#include "setgraph/corpus.hpp"
#include "setgraph/errors.hpp"
#include "setgraph/generators.hpp"
#include "setgraph/invariants.hpp"
#include "setgraph/partitions.hpp"

using namespace setgraph;

namespace {

std::vector<Mask> class_list(const Colouring& c) { return c.class_masks(); }

/// Peeling by the definition: among the maximum independent sets of what is left, keep the
/// one whose removal leaves the smallest (or largest) independence number; least mask wins ties.
std::vector<Mask> peel_oracle(const Graph& g, bool minimise) {
  std::vector<Mask> classes;
  std::uint64_t residual = oracle::all(g);
  while (residual) {
    std::vector<std::uint64_t> best;
    int best_size = -1;
    for (std::uint64_t s = residual;; s = (s - 1) & residual) {
      if (s && oracle::is_independent(g, s)) {
        if (oracle::size(s) > best_size) {
          best_size = oracle::size(s);
          best.clear();
        }
        if (oracle::size(s) == best_size) best.push_back(s);
      }
      if (s == 0) break;
    }
    std::sort(best.begin(), best.end());
    std::uint64_t pick = 0;
    int pick_alpha = minimise ? 1 << 20 : -1;
    for (std::uint64_t s : best) {
      const std::uint64_t rest = residual & ~s;
      const int a = rest ? oracle::size(oracle::maximum_subsets(g, rest, oracle::is_independent).front()) : 0;
      if (minimise ? a < pick_alpha : a > pick_alpha) {
        pick_alpha = a;
        pick = s;
      }
    }
    classes.push_back(pick);
    residual &= ~pick;
  }
  return classes;
}

}  // namespace

TEST(Colouring, ConstructionAndValidation) {
  const Colouring c = Colouring::from_assignment({1, 2, 1, 3});
  EXPECT_EQ(c.num_colours(), 3);
  EXPECT_EQ(c.class_mask(1), Mask{0b0101});
  EXPECT_EQ(c.weights(), (std::vector<int>{2, 1, 1}));
  EXPECT_THROW(Colouring::from_assignment({1, 3}), std::invalid_argument);
  EXPECT_THROW(Colouring::from_assignment({0, 1}), std::invalid_argument);
  const Mask classes[] = {0b0011, 0b0100};
  EXPECT_THROW(Colouring::from_classes(4, classes), std::invalid_argument);
}

TEST(Colouring, Properness) {
  EXPECT_FALSE(is_proper(complete(2), Colouring::from_assignment({1, 1})));
  EXPECT_TRUE(is_proper(complete(2), Colouring::from_assignment({1, 2})));
  EXPECT_THROW(is_proper(complete(3), Colouring::from_assignment({1, 2})), std::invalid_argument);
  const SetGraph sg = set_graph(3);
  std::vector<int> colours(7);
  for (int i = 1; i <= 3; ++i) colours[sg.vertex(1, i)] = 1;
  colours[sg.vertex(2, 1)] = 2;
  colours[sg.vertex(2, 2)] = 3;
  colours[sg.vertex(2, 3)] = 4;
  colours[sg.vertex(3, 1)] = 5;
  EXPECT_TRUE(is_proper(sg.graph, Colouring::from_assignment(colours)));
}

TEST(ImaxColouring, PathOfFour) {
  const PeelResult r = imax_colouring(path(4));
  EXPECT_EQ(class_list(r.colouring), (std::vector<Mask>{0b1001, 0b0010, 0b0100}));
  EXPECT_EQ(r.trace[0].residual_alpha, 1);
  EXPECT_EQ(r.trace[0].tied_candidates, 1);
}

TEST(ImaxColouring, CycleOfFour) {
  const PeelResult r = imax_colouring(cycle(4), {PeelMode::exhaustive});
  EXPECT_EQ(r.colouring.num_colours(), 2);
  EXPECT_EQ(r.trace[0].residual_alpha, 2);
  EXPECT_EQ(r.trace[0].tied_candidates, 2);
  EXPECT_EQ(r.range->min, 2);
  EXPECT_EQ(r.range->max, 2);
}

TEST(ImaxColouring, SetGraphThree) {
  const SetGraph sg = set_graph(3);
  const PeelResult r = imax_colouring(sg.graph);
  ASSERT_EQ(r.colouring.num_colours(), 5);
  EXPECT_EQ(r.colouring.class_mask(1), bit(sg.vertex(1, 1)) | bit(sg.vertex(1, 2)) | bit(sg.vertex(1, 3)));
  for (int c = 2; c <= 5; ++c) EXPECT_EQ(popcount(r.colouring.class_mask(c)), 1);
}

TEST(ConventionColouring, Examples) {
  EXPECT_EQ(class_list(convention_colouring(path(4)).colouring), (std::vector<Mask>{0b0101, 0b1010}));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(convention_colouring(complete(n)).colouring.num_colours(), n);
}

// set_graph(3) has a single maximum independent set (the singletons), so every peeling
// keeps it first and the K4 that remains costs four more colours: 5 colours, not chi = 4.
TEST(ConventionColouring, SetGraphThreeCannotReachChi) {
  const Graph g = set_graph(3).graph;
  ASSERT_EQ(oracle::maximum_independent_sets(g).size(), 1u);
  const PeelResult r = convention_colouring(g, {PeelMode::exhaustive});
  EXPECT_EQ(r.colouring.num_colours(), 5);
  EXPECT_EQ(r.range->min, 5);
  EXPECT_EQ(oracle::chi(g), 4);
}

TEST(Peeling, MatchesDefinitionOracle) {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t m = 0; m < labelled_graph_count(n); ++m) {
      const Graph g = labelled_graph(n, m);
      ASSERT_EQ(class_list(imax_colouring(g).colouring), peel_oracle(g, true)) << n << " " << m;
      ASSERT_EQ(class_list(convention_colouring(g).colouring), peel_oracle(g, false)) << n << " " << m;
    }
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 300; ++k) {
    const Graph g = oracle::random_graph(6 + k % 3, 0.5, rng);
    ASSERT_EQ(class_list(imax_colouring(g).colouring), peel_oracle(g, true));
    ASSERT_EQ(class_list(convention_colouring(g).colouring), peel_oracle(g, false));
  }
}

TEST(Peeling, ExhaustiveRangeContainsDeterministicCount) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Graph g = oracle::random_graph(4 + k % 6, 0.4, rng);
    for (PeelRule rule : {PeelRule::min_residual_alpha, PeelRule::max_residual_alpha}) {
      const PeelResult r = peel_colouring(g, rule, {PeelMode::exhaustive});
      EXPECT_LE(r.range->min, r.colouring.num_colours());
      EXPECT_GE(r.range->max, r.colouring.num_colours());
      EXPECT_GE(r.range->min, chromatic_number(g));
    }
  }
}

TEST(Peeling, BudgetAndEmptyGraph) {
  EXPECT_THROW(imax_colouring(Graph()), std::invalid_argument);
  EXPECT_THROW(imax_colouring(cycle(12), {PeelMode::exhaustive, 2}), BudgetExceeded);
}

TEST(ImaxNumber, Examples) {
  EXPECT_EQ(chi_imax(thorn_complete(3, ThornSpec({1, 2, 3}))), 4);
  EXPECT_EQ(chi_imax(cycle(6)), 2);
  EXPECT_EQ(imax_number(cycle(6)), 0);
  EXPECT_EQ(imax_number(set_graph(3).graph), 1);
  EXPECT_EQ(chi_imax(empty_sun(5)), 4);
}

TEST(ChromaticPartitions, Examples) {
  EXPECT_EQ(enumerate_chromatic_partitions(complete(3)).size(), 1u);
  const auto p4 = enumerate_chromatic_partitions(path(4));
  EXPECT_EQ(p4.size(), oracle::partitions_into(path(4), 2).size());
  EXPECT_EQ(p4.size(), 1u);  // P4 is connected bipartite: one 2-partition
  EXPECT_EQ(enumerate_chromatic_partitions(cycle(5)).size(), oracle::partitions_into(cycle(5), 3).size());
  EXPECT_EQ(enumerate_chromatic_partitions(cycle(5)).size(), 5u);
}

TEST(ChromaticPartitions, MatchSetPartitionOracle) {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t m = 0; m < labelled_graph_count(n); m += (n == 6 ? 5 : 1)) {
      const Graph g = labelled_graph(n, m);
      std::set<std::vector<int>> got;
      for (const Colouring& c : enumerate_chromatic_partitions(g)) {
        ASSERT_TRUE(is_proper(g, c));
        got.insert(c.assignment());
      }
      const auto expected = oracle::partitions_into(g, oracle::chi(g));
      ASSERT_EQ(got, std::set<std::vector<int>>(expected.begin(), expected.end())) << n << " " << m;
    }
}

TEST(ChromaticPartitions, BudgetAndLimits) {
  int seen = 0;
  const EnumerationStatus s = for_each_chromatic_partition(null_graph(6) , [&](const Colouring&) { return ++seen < 100; });
  EXPECT_TRUE(s.complete);  // the edgeless graph has exactly one 1-partition
  const EnumerationStatus t = for_each_chromatic_partition(cycle(9), [](const Colouring&) { return true; }, 3);
  EXPECT_FALSE(t.complete);
  EXPECT_EQ(t.visited, 3u);
  EXPECT_THROW(enumerate_chromatic_partitions(path(21)), std::out_of_range);
}

TEST(ChromaticPartitions, SamplingIsSeededAndProper) {
  const Graph g = cycle(7);
  const auto a = sample_chromatic_partitions(g, 50, 11);
  const auto b = sample_chromatic_partitions(g, 50, 11);
  ASSERT_EQ(a.size(), 50u);
  EXPECT_EQ(a, b);
  for (const auto& c : a) {
    EXPECT_TRUE(is_proper(g, c));
    EXPECT_EQ(c.num_colours(), 3);
  }
}
