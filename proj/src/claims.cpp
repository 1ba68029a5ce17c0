#include "setgraph/claims.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "setgraph/errors.hpp"
#include "setgraph/graph6.hpp"
#include "setgraph/parallel.hpp"
#include "setgraph/perfection.hpp"

namespace setgraph {

namespace {
constexpr int kRandomOrderLimit = 9;
}

std::string to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::proven: return "proven";
    case ClaimKind::suspect: return "suspect";
    case ClaimKind::conjecture: return "conjecture";
    case ClaimKind::not_checkable: return "not-checkable";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::verified_on_scope: return "verified-on-scope";
    case Verdict::refuted: return "refuted";
    case Verdict::skipped: return "skipped";
    case Verdict::exhausted_no_counterexample: return "exhausted-no-counterexample";
  }
  return "unknown";
}

const Claim& find_claim(std::string_view id) {
  for (const Claim& c : claim_registry())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown claim '" + std::string(id) + "'");
}

std::vector<std::string> expand_claim_ids(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  auto add = [&](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const std::string& id : ids) {
    if (id == "all") {
      for (const Claim& c : claim_registry()) add(c.id);
      continue;
    }
    bool matched = false;
    for (const Claim& c : claim_registry()) {
      if (c.id == id || (c.id.starts_with(id) && c.id.size() == id.size() + 1 && id.find('.') != std::string::npos)) {
        add(c.id);
        matched = true;
      }
    }
    if (!matched) throw std::invalid_argument("unknown claim '" + id + "'");
  }
  return out;
}

namespace {

/// Per-worker accumulator keeping only the least counterexamples by graph6 text.
struct Accumulator {
  CheckStats stats;
  std::vector<Counterexample> kept;
  Json values = Json::array();

  void record(const Graph& g, const Json& params, const Evaluation& e, std::size_t limit, bool keep_values) {
    ++stats.graphs_scanned;
    if (!e.applicable) {
      if (keep_values && !e.values.is_null()) values.push_back(e.values);
      return;
    }
    ++stats.hypothesis_matched;
    if (keep_values && !e.values.is_null()) values.push_back(e.values);
    if (!e.violation) return;
    ++stats.violations;
    if (e.harness_fault) ++stats.harness_faults;
    Counterexample c{g6_encode(g), params, *e.violation, e.harness_fault};
    kept.push_back(std::move(c));
    trim(limit);
  }

  void trim(std::size_t limit) {
    std::stable_sort(kept.begin(), kept.end(), [](const Counterexample& a, const Counterexample& b) {
      if (a.harness_fault != b.harness_fault) return a.harness_fault;
      return a.graph6 < b.graph6;
    });
    if (kept.size() > limit) kept.resize(limit);
  }

  void merge(Accumulator&& other, std::size_t limit) {
    stats.graphs_scanned += other.stats.graphs_scanned;
    stats.hypothesis_matched += other.stats.hypothesis_matched;
    stats.violations += other.stats.violations;
    stats.items_skipped += other.stats.items_skipped;
    stats.harness_faults += other.stats.harness_faults;
    for (auto& c : other.kept) kept.push_back(std::move(c));
    trim(limit);
  }
};

Evaluation guarded_evaluate(const Claim& claim, const Graph& g, const Json& params, const Scope& scope, bool& skipped) {
  try {
    return claim.evaluate(g, params, scope);
  } catch (const BudgetExceeded&) {
    skipped = true;
    return Evaluation{false, nullptr, std::nullopt, false};
  }
}

Json corpus_scope_json(const Scope& scope) {
  return {{"corpus", "exhaustive"},
          {"orders", {scope.min_order, scope.max_order}},
          {"connected_only", scope.connected_only},
          {"dedup", scope.dedup == Dedup::canonical ? "canonical" : "none"},
          {"partition_max_order", scope.partition_max_order}};
}

Accumulator scan_corpus(const Claim& claim, const Scope& scope) {
  const int jobs = std::max(1, scope.jobs);
  std::vector<Accumulator> workers(jobs);
  const Json params = Json::object();
  auto visit = [&](const Graph& g, int w) {
    bool skipped = false;
    Evaluation e = guarded_evaluate(claim, g, params, scope, skipped);
    if (skipped) {
      ++workers[w].stats.items_skipped;
      ++workers[w].stats.graphs_scanned;
      return;
    }
    workers[w].record(g, params, e, scope.max_counterexamples, false);
  };
  for (int order = scope.min_order; order <= scope.max_order; ++order) {
    if (scope.dedup == Dedup::canonical) {
      std::vector<Graph> classes = isomorphism_classes(order);
      if (scope.connected_only) std::erase_if(classes, [](const Graph& g) { return !is_connected(g); });
      parallel_for(classes.size(), jobs, [&](std::uint64_t i, int w) { visit(classes[i], w); });
    } else {
      parallel_for(labelled_graph_count(order), jobs, [&](std::uint64_t mask, int w) {
        const Graph g = labelled_graph(order, mask);
        if (scope.connected_only && !is_connected(g)) return;
        visit(g, w);
      });
    }
  }
  Accumulator total;
  for (auto& w : workers) total.merge(std::move(w), scope.max_counterexamples);
  return total;
}

Accumulator scan_family(const Claim& claim, const Scope& scope) {
  Accumulator total;
  for (const ClaimItem& item : claim.items(scope)) {
    bool skipped = false;
    Evaluation e = guarded_evaluate(claim, item.graph, item.params, scope, skipped);
    if (skipped) {
      ++total.stats.items_skipped;
      ++total.stats.graphs_scanned;
      Json v = item.params;
      v["skipped"] = "budget exceeded";
      total.values.push_back(v);
      continue;
    }
    total.record(item.graph, item.params, e, scope.max_counterexamples, true);
  }
  return total;
}

Verdict settle(const Accumulator& acc) {
  if (acc.stats.violations > 0) return Verdict::refuted;
  if (acc.stats.items_skipped > 0) return Verdict::skipped;
  return Verdict::verified_on_scope;
}

}  // namespace

CheckResult run_check(std::string_view claim_id, const Scope& scope) {
  const Claim& claim = find_claim(claim_id);
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  result.claim_id = claim.id;
  result.kind = claim.kind;
  result.statement = claim.statement;

  if (claim.id == "conj-2.4") return conjecture_search(scope);

  Accumulator acc;
  switch (claim.domain) {
    case ClaimDomain::none:
      result.verdict = Verdict::skipped;
      result.scope = Json::object();
      result.note = "statement has no operational content; not evaluated";
      return result;
    case ClaimDomain::corpus:
      result.scope = corpus_scope_json(scope);
      acc = scan_corpus(claim, scope);
      break;
    case ClaimDomain::family:
      result.scope = claim.describe(scope);
      acc = scan_family(claim, scope);
      break;
  }
  result.verdict = settle(acc);
  result.counterexamples = std::move(acc.kept);
  result.values = std::move(acc.values);
  result.stats = acc.stats;
  result.stats.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

constexpr double kEdgeProbabilities[] = {0.2, 0.35, 0.5, 0.65, 0.8};

/// Graphs of each order in the range, spread evenly over the edge probabilities. Edges are
/// drawn by comparing raw 64-bit outputs against a threshold so the stream does not depend
/// on the standard library's distribution implementations.
std::vector<Graph> random_corpus(std::pair<int, int> orders, std::size_t samples, std::uint64_t seed,
                                 bool connected_only) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  const int order_count = orders.second - orders.first + 1;
  const std::size_t per_cell = std::max<std::size_t>(1, samples / (order_count * std::size(kEdgeProbabilities)));
  for (int n = orders.first; n <= orders.second; ++n)
    for (double p : kEdgeProbabilities) {
      const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0);
      for (std::size_t k = 0; k < per_cell; ++k) {
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v)
          for (int u = 0; u < v; ++u)
            if (rng() < threshold) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (connected_only && !is_connected(g)) continue;
        out.push_back(std::move(g));
      }
    }
  return out;
}

}  // namespace

CheckResult conjecture_search(const Scope& scope) {
  const Claim& claim = find_claim("conj-2.4");
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  result.claim_id = claim.id;
  result.kind = claim.kind;
  result.statement = claim.statement;

  Accumulator acc;
  if (scope.random_orders) {
    const auto [lo, hi] = *scope.random_orders;
    if (lo < 1 || hi < lo || hi > kRandomOrderLimit)
      throw std::invalid_argument("random conjecture search needs orders within 1.." +
                                  std::to_string(kRandomOrderLimit));
    const std::vector<Graph> graphs = random_corpus(*scope.random_orders, scope.samples, scope.seed,
                                                    scope.connected_only);
    const int jobs = std::max(1, scope.jobs);
    std::vector<Accumulator> workers(jobs);
    const Json params = Json::object();
    parallel_for(graphs.size(), jobs, [&](std::uint64_t i, int w) {
      bool skipped = false;
      Evaluation e = guarded_evaluate(claim, graphs[i], params, scope, skipped);
      if (skipped) {
        ++workers[w].stats.items_skipped;
        ++workers[w].stats.graphs_scanned;
        return;
      }
      workers[w].record(graphs[i], params, e, scope.max_counterexamples, false);
    });
    for (auto& w : workers) acc.merge(std::move(w), scope.max_counterexamples);
    Json probabilities = Json::array();
    for (double p : kEdgeProbabilities) probabilities.push_back(p);
    result.scope = {{"corpus", "random"},
                    {"orders", {lo, hi}},
                    {"edge_probabilities", probabilities},
                    {"samples", scope.samples},
                    {"seed", scope.seed},
                    {"connected_only", scope.connected_only}};
  } else {
    result.scope = corpus_scope_json(scope);
    result.scope.erase("partition_max_order");
    acc = scan_corpus(claim, scope);
  }
  if (acc.stats.violations > 0)
    result.verdict = Verdict::refuted;
  else if (acc.stats.items_skipped > 0)
    result.verdict = Verdict::skipped;
  else
    result.verdict = Verdict::exhausted_no_counterexample;
  result.counterexamples = std::move(acc.kept);
  result.stats = acc.stats;
  result.stats.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

bool reproduces(std::string_view claim_id, const Counterexample& counterexample, const Scope& scope) {
  const Claim& claim = find_claim(claim_id);
  const Graph g = g6_decode(counterexample.graph6);
  const Evaluation e = claim.evaluate(g, counterexample.params, scope);
  return e.applicable && e.violation.has_value();
}

int triage_exit_code(const std::vector<CheckResult>& results) {
  int code = 0;
  for (const auto& r : results) {
    if (r.stats.harness_faults > 0) return 1;
    if (r.verdict != Verdict::refuted) continue;
    if (r.kind == ClaimKind::proven) return 1;
    code = 2;
  }
  return code;
}

Json to_json(const CheckResult& r, bool include_timing) {
  Json counterexamples = Json::array();
  for (const auto& c : r.counterexamples) {
    Json entry = {{"graph6", c.graph6}, {"params", c.params}, {"detail", c.detail}};
    if (c.harness_fault) entry["harness_fault"] = true;
    counterexamples.push_back(std::move(entry));
  }
  Json stats = {{"graphs_scanned", r.stats.graphs_scanned},
                {"hypothesis_matched", r.stats.hypothesis_matched},
                {"violations", r.stats.violations},
                {"items_skipped", r.stats.items_skipped},
                {"harness_faults", r.stats.harness_faults}};
  if (include_timing) stats["runtime_ms"] = r.stats.runtime_ms;
  Json out = {{"claim_id", r.claim_id},   {"kind", to_string(r.kind)}, {"statement", r.statement},
              {"scope", r.scope},         {"verdict", to_string(r.verdict)}, {"counterexamples", counterexamples},
              {"values", r.values},       {"stats", stats}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

}  // namespace setgraph
