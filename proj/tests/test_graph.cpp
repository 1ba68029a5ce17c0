#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "setgraph/corpus.hpp"
#include "setgraph/errors.hpp"
#include "setgraph/generators.hpp"
#include "setgraph/graph6.hpp"
#include "setgraph/invariants.hpp"

using namespace setgraph;

TEST(Graph, SingleVertex) {
  const Graph g = Graph::from_edges(1, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0u);
  EXPECT_EQ(g.degree(0), 0);
}

TEST(Graph, PathFromEdges) {
  const Graph g = Graph::from_edges(3, {{0, 2}, {1, 2}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_EQ(g.degree(2), 2);
}

TEST(Graph, RejectsSelfLoopsAndBadIndices) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(Graph::from_edges(3, {{-1, 2}}), std::out_of_range);
  EXPECT_THROW(Graph::from_adjacency({0b10, 0b00}), std::invalid_argument);
}

TEST(Graph, EdgesAreSortedAndUnique) {
  const Graph g = Graph::from_edges(4, {{3, 0}, {0, 3}, {2, 1}, {1, 0}});
  const std::vector<Edge> expected = {{0, 1}, {1, 2}, {0, 3}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(InducedSubgraph, FullSetIsIdentity) {
  const Graph g = set_graph(3).graph;
  EXPECT_EQ(induced_subgraph(g, VertexSet(g.vertices())), g);
}

TEST(InducedSubgraph, FourVerticesOfC5FormP4) {
  for (int drop = 0; drop < 5; ++drop) {
    const Graph h = induced_subgraph(cycle(5), VertexSet(0b11111 & ~bit(drop)));
    EXPECT_EQ(h.order(), 4);
    EXPECT_EQ(h.size(), 3u);
    EXPECT_TRUE(is_connected(h));
    EXPECT_EQ(max_degree(h), 2);
  }
}

TEST(InducedSubgraph, SetGraphCliqueOfDoubletonsAndFullSet) {
  const SetGraph sg = set_graph(3);
  Mask s = 0;
  for (auto [size, index] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}}) s |= bit(sg.vertex(size, index));
  const Graph h = induced_subgraph(sg.graph, VertexSet(s));
  EXPECT_EQ(h, complete(4));
}

TEST(InducedSubgraph, RejectsOutOfRangeMembers) {
  EXPECT_THROW(induced_subgraph(path(3), VertexSet(0b1000)), std::out_of_range);
}

TEST(Complement, Basics) {
  EXPECT_EQ(complement(complete(5)), null_graph(5));
  const Graph g = set_graph(3).graph;
  EXPECT_EQ(complement(complement(g)), g);
  // C5 is self-complementary: its complement is the pentagram, another 5-cycle.
  const Graph c = complement(cycle(5));
  EXPECT_EQ(c.size(), 5u);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c.degree(v), 2);
  EXPECT_TRUE(is_connected(c));
}

TEST(JoinK1, Examples) {
  EXPECT_EQ(join_k1(complete(1)), complete(2));
  const Graph star = join_k1(null_graph(4));
  EXPECT_EQ(star.degree(4), 4);
  EXPECT_EQ(star.size(), 4u);
  const Graph wheel = join_k1(cycle(4));
  EXPECT_EQ(chromatic_number(cycle(4)), 2);
  EXPECT_EQ(chromatic_number(wheel), 3);
}

TEST(ClosedNeighbourhood, Examples) {
  EXPECT_EQ(closed_neighbourhood(complete(1), 0), VertexSet({0}));
  EXPECT_EQ(closed_neighbourhood(cycle(5), 2), VertexSet({1, 2, 3}));
  const SetGraph sg = set_graph(3);
  EXPECT_EQ(closed_neighbourhood(sg.graph, sg.vertex(3, 1)), VertexSet(sg.graph.vertices()));
  EXPECT_THROW(closed_neighbourhood(cycle(5), 5), std::out_of_range);
}

TEST(Connectivity, Examples) {
  EXPECT_FALSE(is_connected(null_graph(3)));
  EXPECT_TRUE(is_connected(path(5)));
  EXPECT_TRUE(is_connected(Graph()));
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_connected(set_graph(n).graph));
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(g6_encode(complete(1)), "@");
  EXPECT_EQ(g6_encode(path(3)), "Bg");
  EXPECT_EQ(g6_encode(complete(4)), "C~");
  EXPECT_EQ(g6_encode(Graph()), "?");
  // Petersen graph, outer cycle 0..4, spokes i to i+5, inner pentagram.
  std::vector<Edge> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.emplace_back(i, (i + 1) % 5);
    petersen.emplace_back(i, i + 5);
    petersen.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_EQ(g6_encode(Graph::from_edges(10, petersen)), "IheA@GUAo");
}

TEST(Graph6, RoundTripRandomGraphs) {
  std::mt19937_64 rng(12345);
  for (int k = 0; k < 1000; ++k) {
    const int n = static_cast<int>(rng() % 13);
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * (k % 10) / 10.0, rng);
    EXPECT_EQ(g6_decode(g6_encode(g)), g);
  }
}

TEST(Graph6, RejectsMalformedText) {
  EXPECT_THROW(g6_decode(""), Graph6Error);
  EXPECT_THROW(g6_decode("B"), Graph6Error);        // too short
  EXPECT_THROW(g6_decode("Bgg"), Graph6Error);      // too long
  EXPECT_THROW(g6_decode("B\x7f"), Graph6Error);    // illegal character
  EXPECT_THROW(g6_decode("Bh"), Graph6Error);       // padding bit set
}

TEST(Graph6, StreamReportsLineNumbersAndContinues) {
  std::istringstream in(">>graph6<<Bg\n\nC~\nnot graph6\n@\n");
  const Graph6File f = read_graph6_stream(in);
  ASSERT_EQ(f.graphs.size(), 3u);
  EXPECT_EQ(f.graphs[0].graph, path(3));
  EXPECT_EQ(f.graphs[1].line_number, 3u);
  EXPECT_EQ(f.graphs[2].graph, complete(1));
  ASSERT_EQ(f.errors.size(), 1u);
  EXPECT_EQ(f.errors[0].line_number, 4u);
}

TEST(Corpus, ExhaustiveCountsBeforeFilters) {
  for (int n = 0; n <= 5; ++n) {
    std::uint64_t count = 0;
    iterate_corpus({ExhaustiveSource{n, n}, false, Dedup::none}, [&](const Graph&) { ++count; });
    EXPECT_EQ(count, std::uint64_t{1} << (n * (n - 1) / 2));
  }
}

TEST(Corpus, ExhaustiveVisitsEachLabelledGraphOnce) {
  std::set<std::string> seen;
  iterate_corpus({ExhaustiveSource{4, 4}, false, Dedup::none},
                 [&](const Graph& g) { EXPECT_TRUE(seen.insert(g6_encode(g)).second); });
  EXPECT_EQ(seen.size(), 64u);
}

TEST(Corpus, LabelledIndexMatchesEdgeMask) {
  for (std::uint64_t m = 0; m < labelled_graph_count(5); ++m) EXPECT_EQ(edge_mask(labelled_graph(5, m)), m);
}

TEST(Corpus, ConnectedLabelledCounts) {
  const std::uint64_t expected[] = {1, 1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n) {
    CorpusStats stats = iterate_corpus({ExhaustiveSource{n, n}, true, Dedup::none}, [](const Graph&) {});
    EXPECT_EQ(stats.emitted, expected[n]) << n;
  }
}

/// Isomorphism classes by brute force: the least edge mask over all vertex permutations.
std::size_t brute_class_count(int n, bool connected_only) {
  std::set<std::uint64_t> reps;
  std::vector<int> perm(n);
  for (std::uint64_t m = 0; m < labelled_graph_count(n); ++m) {
    const Graph g = labelled_graph(n, m);
    if (connected_only && !is_connected(g)) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::vector<Edge> edges;
      for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
      best = std::min(best, edge_mask(Graph::from_edges(n, edges)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    reps.insert(best);
  }
  return reps.size();
}

TEST(Corpus, CanonicalDedupCounts) {
  EXPECT_EQ(isomorphism_classes(4).size(), 11u);
  EXPECT_EQ(brute_class_count(4, false), 11u);
  std::uint64_t connected6 = 0;
  iterate_corpus({ExhaustiveSource{6, 6}, true, Dedup::canonical}, [&](const Graph&) { ++connected6; });
  EXPECT_EQ(connected6, 112u);
  EXPECT_EQ(brute_class_count(5, false), isomorphism_classes(5).size());
  EXPECT_EQ(isomorphism_classes(7).size(), 1044u);
}

TEST(Corpus, CanonicalCodeIsInvariantUnderRelabelling) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    EXPECT_EQ(canonical_code(g), canonical_code(Graph::from_edges(n, edges)));
  }
}

TEST(Corpus, CanonicalDedupOverFamilies) {
  std::vector<std::string> seen;
  CorpusStats stats = iterate_corpus({FamilySource{"cycle", 3, 6}, false, Dedup::canonical},
                                     [&](const Graph& g) { seen.push_back(g6_encode(g)); });
  EXPECT_EQ(stats.emitted, 4u);
}
