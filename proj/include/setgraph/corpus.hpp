#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "setgraph/graph.hpp"
#include "setgraph/graph6.hpp"

namespace setgraph {

/// Number of vertex pairs of an order-n graph.
constexpr int pair_count(int order) { return order * (order - 1) / 2; }

/// 2^(n choose 2): labelled graphs on n vertices.
std::uint64_t labelled_graph_count(int order);

/// Labelled graph whose edge set is `edge_mask`, where bit k is the k-th vertex pair in
/// graph6 order (0,1), (0,2), (1,2), (0,3), ...
Graph labelled_graph(int order, std::uint64_t edge_mask);

/// Inverse of labelled_graph.
std::uint64_t edge_mask(const Graph& g);

inline constexpr int kCanonicalOrderLimit = 8;

/// Smallest adjacency bit string (graph6 pair order, first pair most significant) over all
/// vertex permutations. Orders up to kCanonicalOrderLimit.
std::uint64_t canonical_code(const Graph& g);
/// The graph realising canonical_code(g).
Graph canonical_graph(const Graph& g);

/// One representative per isomorphism class of order-n graphs, ascending by canonical code.
std::vector<Graph> isomorphism_classes(int order);

enum class Dedup { none, canonical };

struct ExhaustiveSource {
  int min_order = 1;
  int max_order = 1;
};

struct FamilySource {
  std::string family;
  int first = 1;
  int last = 1;
};

struct Graph6FileSource {
  std::string path;
};

struct Corpus {
  std::variant<ExhaustiveSource, FamilySource, Graph6FileSource> source;
  bool connected_only = false;
  Dedup dedup = Dedup::none;
};

struct CorpusStats {
  std::uint64_t emitted = 0;
  std::uint64_t filtered = 0;
  std::vector<Graph6ReadError> errors;
};

/// Deterministic stream: exhaustive sources go order by order in ascending edge-mask
/// order (canonical dedup: ascending canonical code); families by ascending parameter;
/// files in line order. Malformed graph6 lines are reported in the stats.
CorpusStats iterate_corpus(const Corpus& corpus, const std::function<void(const Graph&)>& visit);

}  // namespace setgraph
