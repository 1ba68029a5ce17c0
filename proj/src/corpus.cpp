#include "setgraph/corpus.hpp"

#include <array>
#include <fstream>
#include <set>
#include <stdexcept>

#include "setgraph/generators.hpp"

namespace setgraph {

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), pairs_(pair_count(g.order())) {
    best_ = pairs_ == 0 ? 0 : (std::uint64_t{1} << pairs_) - 1;
    best_perm_.fill(0);
    place(0, 0, 0);
  }

  std::uint64_t code() const { return best_; }
  const std::array<int, kCanonicalOrderLimit>& permutation() const { return best_perm_; }

 private:
  std::uint64_t prefix(std::uint64_t code, int length) const { return code >> (pairs_ - length); }

  void place(int pos, Mask used, std::uint64_t code) {
    if (pos == n_) {
      if (code < best_ || !found_) {
        best_ = code;
        best_perm_ = perm_;
        found_ = true;
      }
      return;
    }
    const int length = (pos + 1) * pos / 2;
    for (int v = 0; v < n_; ++v) {
      if (used & bit(v)) continue;
      std::uint64_t next = code;
      for (int i = 0; i < pos; ++i)
        if (g_.adjacent(perm_[i], v)) next |= std::uint64_t{1} << (pairs_ - 1 - (length - pos + i));
      if (length > 0 && prefix(next, length) > prefix(best_, length)) continue;
      perm_[pos] = v;
      place(pos + 1, used | bit(v), next);
    }
  }

  const Graph& g_;
  int n_;
  int pairs_;
  bool found_ = false;
  std::uint64_t best_ = 0;
  std::array<int, kCanonicalOrderLimit> perm_{};
  std::array<int, kCanonicalOrderLimit> best_perm_{};
};

Graph from_canonical_code(int order, std::uint64_t code) {
  const int pairs = pair_count(order);
  std::uint64_t mask = 0;
  for (int k = 0; k < pairs; ++k)
    if ((code >> (pairs - 1 - k)) & 1) mask |= std::uint64_t{1} << k;
  return labelled_graph(order, mask);
}

void require_canonical_order(int order) {
  if (order < 0 || order > kCanonicalOrderLimit)
    throw std::out_of_range("canonical forms limited to order " + std::to_string(kCanonicalOrderLimit));
}

}  // namespace

std::uint64_t labelled_graph_count(int order) {
  if (pair_count(order) >= 64) throw std::out_of_range("labelled graph count overflows");
  return std::uint64_t{1} << pair_count(order);
}

Graph labelled_graph(int order, std::uint64_t mask) {
  if (order < 0 || order > 11) throw std::out_of_range("labelled graph index needs order <= 11");
  std::vector<Mask> rows(order, 0);
  int k = 0;
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
  return Graph::from_adjacency(std::move(rows));
}

std::uint64_t edge_mask(const Graph& g) {
  if (g.order() > 11) throw std::out_of_range("edge mask needs order <= 11");
  std::uint64_t mask = 0;
  int k = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << k;
  return mask;
}

std::uint64_t canonical_code(const Graph& g) {
  require_canonical_order(g.order());
  return CanonicalSearch(g).code();
}

Graph canonical_graph(const Graph& g) {
  require_canonical_order(g.order());
  return from_canonical_code(g.order(), canonical_code(g));
}

std::vector<Graph> isomorphism_classes(int order) {
  require_canonical_order(order);
  if (order == 0) return {Graph()};
  std::set<std::uint64_t> codes = {0};  // K1
  for (int k = 2; k <= order; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : codes) {
      const Graph base = from_canonical_code(k - 1, code);
      auto adj = base.adjacency();
      for (Mask attach = 0; attach < bit(k - 1); ++attach) {
        std::vector<Mask> rows(adj.begin(), adj.end());
        for_each_bit(attach, [&](int v) { rows[v] |= bit(k - 1); });
        rows.push_back(attach);
        next.insert(canonical_code(Graph::from_adjacency(std::move(rows))));
      }
    }
    codes = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(from_canonical_code(order, code));
  return out;
}

CorpusStats iterate_corpus(const Corpus& corpus, const std::function<void(const Graph&)>& visit) {
  CorpusStats stats;
  auto emit = [&](const Graph& g) {
    if (corpus.connected_only && !is_connected(g)) {
      ++stats.filtered;
      return;
    }
    ++stats.emitted;
    visit(g);
  };
  auto emit_deduplicated = [&](std::vector<Graph> graphs) {
    if (corpus.dedup == Dedup::canonical) {
      std::set<std::uint64_t> seen;
      for (const Graph& g : graphs) {
        require_canonical_order(g.order());
        if (seen.insert(canonical_code(g) ^ (std::uint64_t(g.order()) << 56)).second) emit(g);
      }
    } else {
      for (const Graph& g : graphs) emit(g);
    }
  };

  if (const auto* src = std::get_if<ExhaustiveSource>(&corpus.source)) {
    for (int order = src->min_order; order <= src->max_order; ++order) {
      if (corpus.dedup == Dedup::canonical) {
        for (const Graph& g : isomorphism_classes(order)) emit(g);
      } else {
        const std::uint64_t count = labelled_graph_count(order);
        for (std::uint64_t m = 0; m < count; ++m) emit(labelled_graph(order, m));
      }
    }
  } else if (const auto* fam = std::get_if<FamilySource>(&corpus.source)) {
    std::vector<Graph> graphs;
    for (int n = fam->first; n <= fam->last; ++n) graphs.push_back(make_family(fam->family, n));
    emit_deduplicated(std::move(graphs));
  } else {
    const auto& file = std::get<Graph6FileSource>(corpus.source);
    std::ifstream in(file.path);
    if (!in) throw std::runtime_error("cannot open graph6 file " + file.path);
    Graph6File parsed = read_graph6_stream(in);
    stats.errors = std::move(parsed.errors);
    std::vector<Graph> graphs;
    for (auto& line : parsed.graphs) graphs.push_back(std::move(line.graph));
    emit_deduplicated(std::move(graphs));
  }
  return stats;
}

}  // namespace setgraph
