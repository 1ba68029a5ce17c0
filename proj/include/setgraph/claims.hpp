#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "setgraph/corpus.hpp"
#include "setgraph/graph.hpp"

namespace setgraph {

using Json = nlohmann::ordered_json;

enum class ClaimKind {
  proven,         ///< a refutation means the harness is wrong
  suspect,        ///< a refutation is a reported finding
  conjecture,     ///< open statement; a refutation is a finding
  not_checkable,  ///< listed for completeness, never evaluated
};

enum class Verdict { verified_on_scope, refuted, skipped, exhausted_no_counterexample };

std::string to_string(ClaimKind kind);
std::string to_string(Verdict verdict);

/// Where a check looks and how hard. Defaults reproduce the shipped ledger.
struct Scope {
  int min_order = 1;
  int max_order = 6;              ///< exhaustive corpora cover orders min_order..max_order
  int partition_max_order = 6;    ///< corpus graphs above this skip chromatic-partition checks
  bool connected_only = true;
  Dedup dedup = Dedup::none;
  std::optional<std::pair<int, int>> range;  ///< overrides family parameter ranges
  std::uint64_t seed = 0;
  std::size_t samples = 10'000;
  int jobs = 1;
  std::size_t max_counterexamples = 5;
  std::uint64_t partition_budget = 200'000;
  std::uint64_t peel_budget = 2'000'000;
  /// Conjecture search only: random graphs of these orders instead of an exhaustive corpus.
  std::optional<std::pair<int, int>> random_orders;
};

struct Counterexample {
  std::string graph6;
  Json params = Json::object();
  Json detail = Json::object();
  bool harness_fault = false;
};

struct CheckStats {
  std::uint64_t graphs_scanned = 0;
  std::uint64_t hypothesis_matched = 0;
  std::uint64_t violations = 0;
  std::uint64_t items_skipped = 0;
  std::uint64_t harness_faults = 0;
  double runtime_ms = 0;
};

struct CheckResult {
  std::string claim_id;
  ClaimKind kind = ClaimKind::proven;
  std::string statement;
  Json scope = Json::object();
  Verdict verdict = Verdict::skipped;
  std::vector<Counterexample> counterexamples;  ///< least graph6 text first, at most max_counterexamples
  Json values = Json::array();                  ///< per-item computed values (family checks)
  CheckStats stats;
  std::string note;
};

/// Outcome of evaluating one claim on one graph.
struct Evaluation {
  bool applicable = true;  ///< false when the claim's hypothesis does not hold
  Json values;             ///< recorded for family checks when not null
  std::optional<Json> violation;
  bool harness_fault = false;
};

struct ClaimItem {
  Graph graph;
  Json params = Json::object();
};

enum class ClaimDomain { corpus, family, none };

struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::proven;
  std::string statement;
  ClaimDomain domain = ClaimDomain::none;
  /// Family claims: the graphs to check for a scope.
  std::function<std::vector<ClaimItem>(const Scope&)> items;
  /// Family claims: scope descriptor.
  std::function<Json(const Scope&)> describe;
  std::function<Evaluation(const Graph&, const Json& params, const Scope&)> evaluate;
};

const std::vector<Claim>& claim_registry();
/// Throws std::invalid_argument for unknown identifiers.
const Claim& find_claim(std::string_view id);
/// Resolves groups ("prop-3.1" to its items, "all" to everything) and validates ids.
std::vector<std::string> expand_claim_ids(const std::vector<std::string>& ids);

CheckResult run_check(std::string_view claim_id, const Scope& scope);

/// Exhaustive (or seeded random) search for weakly perfect graphs whose every vertex lies in
/// a maximum clique but which are imperfect. Both perfection oracles must agree.
CheckResult conjecture_search(const Scope& scope);

/// Re-runs the claim predicate on a stored counterexample; true if the violation reproduces.
bool reproduces(std::string_view claim_id, const Counterexample& counterexample, const Scope& scope);

/// 0: nothing refuted; 2: only suspect or conjectured statements refuted; 1: a proven
/// statement refuted or an oracle disagreement (harness bug).
int triage_exit_code(const std::vector<CheckResult>& results);

Json to_json(const CheckResult& result, bool include_timing = false);

}  // namespace setgraph
