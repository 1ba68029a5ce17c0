#include <algorithm>
#include <stdexcept>

#include "setgraph/claims.hpp"
#include "setgraph/colourings.hpp"
#include "setgraph/errors.hpp"
#include "setgraph/generators.hpp"
#include "setgraph/invariants.hpp"
#include "setgraph/partitions.hpp"
#include "setgraph/perfection.hpp"
#include "setgraph/rainbow.hpp"

namespace setgraph {

namespace {

Evaluation holds(Json values = nullptr) { return Evaluation{true, std::move(values), std::nullopt, false}; }
Evaluation not_applicable(Json values = nullptr) { return Evaluation{false, std::move(values), std::nullopt, false}; }
Evaluation violated(Json detail, Json values = nullptr) {
  return Evaluation{true, std::move(values), std::move(detail), false};
}
Evaluation check(bool ok, Json detail, Json values = nullptr) {
  return ok ? holds(std::move(values)) : violated(std::move(detail), std::move(values));
}

int pow2(int k) { return 1 << k; }

RainbowBounds exact_bounds(const Graph& g, const Scope& scope) {
  RainbowBounds b = rainbow_bounds(g, scope.partition_budget);
  if (!b.exact) throw BudgetExceeded("chromatic partition budget exceeded");
  return b;
}

/// Inclusive parameter range: the scope override clipped to [hard_lo, hard_hi], else the default.
std::pair<int, int> parameter_range(const Scope& scope, int lo, int hi, int hard_lo, int hard_hi) {
  if (!scope.range) return {lo, hi};
  return {std::max(scope.range->first, hard_lo), std::min(scope.range->second, hard_hi)};
}

Json range_json(std::pair<int, int> r) { return Json::array({r.first, r.second}); }

Json peel_range_json(const Graph& g, PeelRule rule, const Scope& scope) {
  try {
    const PeelResult r = peel_colouring(g, rule, {PeelMode::exhaustive, scope.peel_budget});
    return {{"min", r.range->min}, {"max", r.range->max}};
  } catch (const BudgetExceeded&) {
    return nullptr;
  }
}

/// True iff every colour class j is a maximum independent set of what classes 1..j-1 leave,
/// and among those the class is one a peeling with `rule` could keep.
bool follows_peeling(const Graph& g, const Colouring& c, PeelRule rule) {
  Mask residual = g.vertices();
  for (Mask cls : c.class_masks()) {
    if ((cls & ~residual) != 0) return false;
    const Graph h = induced_subgraph(g, VertexSet(residual));
    std::vector<int> index(g.order(), -1);
    int k = 0;
    for_each_bit(residual, [&](int v) { index[v] = k++; });
    Mask mapped = 0;
    for_each_bit(cls, [&](int v) { mapped |= bit(index[v]); });
    if (popcount(mapped) != independence_number(h)) return false;
    int target = -1;
    for (VertexSet x : enumerate_maximum_independent_sets(h)) {
      const int a = independence_number(induced_subgraph(h, VertexSet(h.vertices() & ~x.mask())));
      target = target < 0 ? a : (rule == PeelRule::max_residual_alpha ? std::max(target, a) : std::min(target, a));
    }
    const int mine = independence_number(induced_subgraph(h, VertexSet(h.vertices() & ~mapped)));
    if (mine != target) return false;
    residual &= ~cls;
  }
  return residual == 0;
}

Claim corpus_claim(std::string id, ClaimKind kind, std::string statement,
                   std::function<Evaluation(const Graph&, const Json&, const Scope&)> evaluate) {
  Claim c;
  c.id = std::move(id);
  c.kind = kind;
  c.statement = std::move(statement);
  c.domain = ClaimDomain::corpus;
  c.evaluate = std::move(evaluate);
  return c;
}

using ItemFn = std::function<std::vector<ClaimItem>(const Scope&)>;
using DescribeFn = std::function<Json(const Scope&)>;

Claim family_claim(std::string id, ClaimKind kind, std::string statement, ItemFn items, DescribeFn describe,
                   std::function<Evaluation(const Graph&, const Json&, const Scope&)> evaluate) {
  Claim c;
  c.id = std::move(id);
  c.kind = kind;
  c.statement = std::move(statement);
  c.domain = ClaimDomain::family;
  c.items = std::move(items);
  c.describe = std::move(describe);
  c.evaluate = std::move(evaluate);
  return c;
}

/// One-family claim over n in a range; `keep` filters parameters (parity and the like).
struct FamilyRange {
  std::string family;
  int lo, hi, hard_lo, hard_hi;
  std::function<bool(int)> keep = [](int) { return true; };
};

ItemFn family_items(FamilyRange f) {
  return [f](const Scope& scope) {
    std::vector<ClaimItem> out;
    auto [lo, hi] = parameter_range(scope, f.lo, f.hi, f.hard_lo, f.hard_hi);
    for (int n = lo; n <= hi; ++n)
      if (f.keep(n)) out.push_back({make_family(f.family, n), Json{{"family", f.family}, {"n", n}}});
    return out;
  };
}

DescribeFn family_describe(FamilyRange f) {
  return [f](const Scope& scope) {
    Json out = {{"family", f.family},
                {"n", range_json(parameter_range(scope, f.lo, f.hi, f.hard_lo, f.hard_hi))}};
    if (scope.range) out["requested"] = range_json(*scope.range);
    return out;
  };
}

int n_of(const Json& params) { return params.at("n").get<int>(); }

// ---- corpus claims ----

Evaluation lemma_1_1(const Graph& g, const Json&, const Scope& scope) {
  if (g.order() > scope.partition_max_order) return not_applicable();
  const RainbowBounds base = exact_bounds(g, scope);
  const RainbowBounds joined = exact_bounds(join_k1(g), scope);
  return check(joined.r_minus == base.r_minus + 1 && joined.r_plus == base.r_plus + 1,
               {{"r_minus", base.r_minus}, {"r_plus", base.r_plus}, {"joined_r_minus", joined.r_minus},
                {"joined_r_plus", joined.r_plus}});
}

/// Some rainbow vertex of c has degree below (colours - 1); returns it.
std::optional<int> low_degree_rainbow_vertex(const Graph& g, const Colouring& c) {
  const RainbowReport r = rainbow_number(g, c);
  for (int v : r.rainbow_vertices.members())
    if (g.degree(v) < c.num_colours() - 1) return v;
  return std::nullopt;
}

Evaluation lemma_2_1(const Graph& g, const Json&, const Scope& scope) {
  for (PeelRule rule : {PeelRule::min_residual_alpha, PeelRule::max_residual_alpha}) {
    const Colouring c = peel_colouring(g, rule).colouring;
    if (auto v = low_degree_rainbow_vertex(g, c))
      return violated({{"colouring", rule == PeelRule::min_residual_alpha ? "imax" : "convention"},
                       {"vertex", *v},
                       {"colours", c.assignment()}});
  }
  if (g.order() > scope.partition_max_order) return holds();
  std::optional<Json> bad;
  const EnumerationStatus status = for_each_chromatic_partition(
      g,
      [&](const Colouring& c) {
        if (auto v = low_degree_rainbow_vertex(g, c)) {
          bad = Json{{"colouring", "chromatic partition"}, {"vertex", *v}, {"colours", c.assignment()}};
          return false;
        }
        return true;
      },
      scope.partition_budget);
  if (bad) return violated(*bad);
  if (!status.complete) throw BudgetExceeded("chromatic partition budget exceeded");
  return holds();
}

Evaluation cor_3_4(const Graph& g, const Json&, const Scope&) {
  const int chi = chromatic_number(g);
  for (PeelRule rule : {PeelRule::min_residual_alpha, PeelRule::max_residual_alpha}) {
    const char* name = rule == PeelRule::min_residual_alpha ? "imax" : "convention";
    const PeelResult p = peel_colouring(g, rule);
    if (!is_proper(g, p.colouring)) return violated({{"colouring", name}, {"reason", "improper"}});
    Mask residual = g.vertices();
    for (const PeelRound& round : p.trace) {
      const int alpha = independence_number(induced_subgraph(g, VertexSet(residual)));
      if (round.chosen.size() != alpha)
        return violated({{"colouring", name}, {"reason", "class not maximum"}, {"iteration", round.iteration}});
      residual &= ~round.chosen.mask();
    }
    if (p.colouring.num_colours() < chi)
      return violated({{"colouring", name}, {"colours", p.colouring.num_colours()}, {"chi", chi}});
  }
  return holds();
}

Evaluation cor_3_2(const Graph& g, const Json&, const Scope&) {
  const Graph thorned = complete_thorn(g, ThornSpec::uniform(g.order()));
  const int base = chi_imax(g);
  const int with_thorns = chi_imax(thorned);
  return check(with_thorns == base + 1, {{"chi_imax", base}, {"thorned_chi_imax", with_thorns}});
}

Evaluation thm_3_3(const Graph& g, const Json&, const Scope&) {
  const int chi = chromatic_number(g);
  const int used = convention_colouring(g).colouring.num_colours();
  return check(used == chi, {{"chi", chi}, {"convention_colours", used}});
}

Evaluation thm_3_3_any(const Graph& g, const Json&, const Scope& scope) {
  const int chi = chromatic_number(g);
  const PeelResult p = convention_colouring(g, {PeelMode::exhaustive, scope.peel_budget});
  return check(p.range->min == chi, {{"chi", chi}, {"convention_min", p.range->min}, {"convention_max", p.range->max}});
}

Evaluation thm_3_5(const Graph& g, const Json&, const Scope& scope) {
  if (g.order() < 2) return not_applicable();
  const int alpha = independence_number(g);
  const int chi = chromatic_number(g);
  if (alpha != chi) return not_applicable();
  const int imax = chi_imax(g);
  return check(imax == chi + 1, {{"alpha", alpha},
                                 {"chi", chi},
                                 {"chi_imax", imax},
                                 {"exhaustive", peel_range_json(g, PeelRule::min_residual_alpha, scope)}});
}

Evaluation obs_delta(const Graph& g, const Json&, const Scope& scope) {
  if (g.order() > scope.partition_max_order) return not_applicable();
  const int chi = chromatic_number(g);
  const int delta = min_degree(g);
  const RainbowBounds b = exact_bounds(g, scope);
  const bool lhs = chi <= delta + 1;
  const bool rhs = b.r_minus == g.order();
  return check(lhs == rhs, {{"chi", chi}, {"min_degree", delta}, {"r_minus", b.r_minus}, {"order", g.order()}});
}

Evaluation r_bipartite(const Graph& g, const Json&, const Scope& scope) {
  if (g.order() > scope.partition_max_order || !is_connected(g) || !is_bipartite(g)) return not_applicable();
  const RainbowBounds b = exact_bounds(g, scope);
  return check(b.r_minus == g.order() && b.r_plus == g.order(), {{"r_minus", b.r_minus}, {"r_plus", b.r_plus}});
}

/// Both oracles agree that the graph is perfect whenever it is weakly perfect with every
/// vertex in a maximum clique; an oracle disagreement is a harness fault.
Evaluation conj_2_4(const Graph& g, const Json&, const Scope&) {
  if (!is_weakly_perfect(g) || !every_vertex_in_maximum_clique(g).covered) return not_applicable();
  const PerfectionVerdict holes = is_perfect_hole_based(g);
  const std::optional<PerfectionVerdict> brute = is_perfect_bruteforce(g);
  if (brute && brute->perfect != holes.perfect) {
    Evaluation e = violated({{"reason", "perfection oracles disagree"},
                             {"hole_based", holes.perfect},
                             {"bruteforce", brute->perfect}});
    e.harness_fault = true;
    return e;
  }
  if (holes.perfect) return holds();
  Json detail = {{"omega", clique_number(g)}, {"chi", chromatic_number(g)}};
  detail["odd_hole"] = holes.witness->members();
  detail["in_complement"] = holes.antihole;
  if (brute) detail["imperfect_induced_subgraph"] = brute->witness->members();
  return violated(detail);
}

// ---- family claims ----

Evaluation set_graph_cliques(const Graph& g, const Json& p, const Scope&) {
  const int n = n_of(p);
  const int omega = clique_number(g);
  const std::uint64_t count = count_maximum_cliques(g);
  const int expected = pow2(n - 1);
  Json values = {{"n", n}, {"order", g.order()}, {"size", g.size()}, {"omega", omega},
                 {"max_clique_count", count}, {"expected", expected}};
  return check(omega == expected && count == std::uint64_t(expected), values, values);
}

Evaluation set_graph_chi(const Graph& g, const Json& p, const Scope&) {
  const int n = n_of(p);
  const int chi = chromatic_number(g);
  Json values = {{"n", n}, {"chi", chi}, {"expected", pow2(n - 1)}};
  return check(chi == pow2(n - 1), values, values);
}

Evaluation set_graph_perfect(const Graph& g, const Json& p, const Scope&) {
  const PerfectionVerdict holes = is_perfect_hole_based(g);
  const std::optional<PerfectionVerdict> brute = is_perfect_bruteforce(g);
  Json values = {{"n", n_of(p)}, {"perfect_hole_based", holes.perfect}};
  values["perfect_bruteforce"] = brute ? Json(brute->perfect) : Json("skipped");
  if (brute && brute->perfect != holes.perfect) {
    Evaluation e = violated(values, values);
    e.harness_fault = true;
    return e;
  }
  return check(holes.perfect, values, values);
}

Evaluation set_graph_unique_alpha(const Graph& g, const Json& p, const Scope&) {
  const int n = n_of(p);
  const auto sets = enumerate_maximum_independent_sets(g);
  const int alpha = independence_number(g);
  Json values = {{"n", n}, {"alpha", alpha}, {"max_independent_set_count", sets.size()},
                 {"expected_alpha", pow2(n - 1) - 1}};
  return check(alpha == pow2(n - 1) - 1 && sets.size() == 1, values, values);
}

Evaluation set_graph_alpha(const Graph& g, const Json& p, const Scope&) {
  const int n = n_of(p);
  const int alpha = independence_number(g);
  Json values = {{"n", n}, {"alpha", alpha}};
  return check(alpha == n, values, values);
}

Evaluation set_graph_rainbow(const Graph& g, const Json& p, const Scope& scope) {
  const int n = n_of(p);
  const int expected = pow2(n) - 1;
  const RainbowBounds b = rainbow_bounds(g, scope.partition_budget);
  if (b.exact) {
    Json values = {{"n", n},
                   {"mode", "exhaustive"},
                   {"partitions", b.partitions_scanned},
                   {"r_minus", b.r_minus},
                   {"r_plus", b.r_plus},
                   {"expected", expected}};
    return check(b.r_minus == expected && b.r_plus == expected, values, values);
  }
  int lo = g.order(), hi = 0;
  const auto samples = sample_chromatic_partitions(g, scope.samples, scope.seed);
  for (const Colouring& c : samples) {
    const int r = rainbow_number(g, c).r;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  Json values = {{"n", n},      {"mode", "sampled"}, {"seed", scope.seed}, {"partitions", samples.size()},
                 {"r_min", lo}, {"r_max", hi},       {"expected", expected}};
  return check(lo == expected && hi == expected, values, values);
}

Evaluation rainbow_equals_order(const Graph& g, const Json& p, const Scope& scope) {
  const RainbowBounds b = exact_bounds(g, scope);
  Json values = p;
  values["order"] = g.order();
  values["r_minus"] = b.r_minus;
  values["r_plus"] = b.r_plus;
  return check(b.r_minus == g.order() && b.r_plus == g.order(), values, values);
}

Evaluation delta_bound_families(const Graph& g, const Json& p, const Scope& scope) {
  const int chi = chromatic_number(g);
  const int delta = g.order() > 1 ? min_degree(g) : 0;
  Json values = p;
  values["chi"] = chi;
  values["min_degree"] = delta;
  try {
    values["r_minus"] = exact_bounds(g, scope).r_minus;
  } catch (const BudgetExceeded&) {
    values["r_minus"] = nullptr;
  } catch (const std::out_of_range&) {
    values["r_minus"] = nullptr;
  }
  const std::string family = p.at("family");
  if (family == "cycle" && n_of(p) % 2 == 1) return not_applicable(values);
  if (family == "cycle") return check(chi < delta + 1, values, values);
  return check(chi == delta + 1, values, values);
}

/// `expected` maps (n, chi) to the stated chi_imax.
using Expectation = std::function<int(int n, int chi)>;

std::function<Evaluation(const Graph&, const Json&, const Scope&)> imax_item(Expectation expected) {
  return [expected](const Graph& g, const Json& p, const Scope& scope) {
    const int n = n_of(p);
    const int chi = chromatic_number(g);
    const int imax = chi_imax(g);
    const int want = expected(n, chi);
    Json values = {{"n", n}, {"order", g.order()}, {"chi", chi}, {"chi_imax", imax}, {"expected_chi_imax", want}};
    values["exhaustive"] = peel_range_json(g, PeelRule::min_residual_alpha, scope);
    return check(imax == want, values, values);
  };
}

std::vector<ClaimItem> thorn_items(const Scope& scope, int lo, int hi, int hard_hi, std::vector<int> offsets) {
  std::vector<ClaimItem> out;
  auto [a, b] = parameter_range(scope, lo, hi, 3, hard_hi);
  for (int n = a; n <= b; ++n)
    for (int offset : offsets) {
      const ThornSpec spec = ThornSpec::ascending(n, offset);
      if (n + spec.total() > kMaxOrder) continue;
      out.push_back({thorn_complete(n, spec), Json{{"family", "thorn-complete"}, {"n", n}, {"thorns", spec.counts()}}});
    }
  return out;
}

DescribeFn thorn_describe(int lo, int hi, int hard_hi, std::vector<std::string> patterns) {
  return [=](const Scope& scope) {
    Json out = {{"family", "thorn-complete"}, {"n", range_json(parameter_range(scope, lo, hi, 3, hard_hi))},
                {"thorns", patterns}};
    if (scope.range) out["requested"] = range_json(*scope.range);
    return out;
  };
}

Evaluation example_1(const Graph& g, const Json& p, const Scope&) {
  const int n = n_of(p);
  const std::vector<int> thorns = p.at("thorns");
  std::vector<int> colours(g.order());
  for (int i = 0; i < n; ++i) colours[i] = i + 1;
  int next = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < thorns[i]; ++j) colours[next++] = i == 0 ? 2 : 1;
  const Colouring described = Colouring::from_assignment(colours);
  const int chi = chromatic_number(g);
  const bool proper = is_proper(g, described);
  const bool peelable = proper && follows_peeling(g, described, PeelRule::max_residual_alpha);
  Json values = {{"n", n},
                 {"thorns", thorns},
                 {"chi", chi},
                 {"described_colours", described.num_colours()},
                 {"described_proper", proper},
                 {"described_follows_convention", peelable},
                 {"described_r", proper ? Json(rainbow_number(g, described).r) : Json(nullptr)},
                 {"convention_weights", convention_colouring(g).colouring.weights()}};
  return check(chi == n && proper && described.num_colours() == chi && peelable, values, values);
}

Evaluation imax_gap(const Graph& g, const Json& p, const Scope&) {
  const int chi = chromatic_number(g);
  const int imax = chi_imax(g);
  Json values = p;
  values["chi"] = chi;
  values["chi_imax"] = imax;
  values["gap"] = imax - chi;
  return check(imax - chi == 0 || imax - chi == 1, values, values);
}

bool even(int n) { return n % 2 == 0; }
bool odd(int n) { return n % 2 == 1; }

const FamilyRange kProp31a{"set-graph", 3, 4, 3, kMaxSetGraphBase};
const FamilyRange kProp31b{"path", 4, 12, 1, kMaxOrder};
const FamilyRange kProp31c{"path", 5, 12, 5, kMaxOrder, odd};
const FamilyRange kProp31d{"cycle", 3, 12, 3, kMaxOrder};
const FamilyRange kProp31e{"sunlet", 3, 10, 3, kMaxOrder / 2};
const FamilyRange kProp31f{"empty-sun", 3, 10, 3, kMaxOrder / 2, odd};
const FamilyRange kProp31g{"empty-sun", 4, 10, 4, kMaxOrder / 2, even};
constexpr int kThornHard = 9;

std::vector<ClaimItem> prop_3_1_family_items(const Scope& scope) {
  std::vector<ClaimItem> out;
  for (const FamilyRange& f : {kProp31a, kProp31b, kProp31d, kProp31e, kProp31f, kProp31g}) {
    auto items = family_items(f)(scope);
    out.insert(out.end(), items.begin(), items.end());
  }
  auto thorny = thorn_items(scope, 3, 6, kThornHard, {0});
  out.insert(out.end(), thorny.begin(), thorny.end());
  return out;
}

std::vector<Claim> build_registry() {
  std::vector<Claim> r;
  const FamilyRange set_graphs{"set-graph", 1, 4, 1, kMaxSetGraphBase};

  r.push_back(corpus_claim("lemma-1.1", ClaimKind::proven,
                           "For G' = K1 + G, r-(G') = 1 + r-(G) and r+(G') = 1 + r+(G).", lemma_1_1));
  r.push_back(corpus_claim("lemma-2.1", ClaimKind::proven,
                           "A vertex yielding a rainbow neighbourhood under a proper l-colouring has degree >= l - 1 "
                           "(every chromatic partition; both peeling colourings).",
                           lemma_2_1));
  {
    Claim c;
    c.id = "cor-2.2";
    c.kind = ClaimKind::not_checkable;
    c.statement = "A vertex possibly yields a rainbow neighbourhood (no operational predicate).";
    c.domain = ClaimDomain::none;
    r.push_back(std::move(c));
  }
  r.push_back(family_claim("prop-2.1", ClaimKind::suspect,
                           "Set-graph G(n) has omega = 2^(n-1) and exactly 2^(n-1) maximum cliques.",
                           family_items(set_graphs), family_describe(set_graphs), set_graph_cliques));
  r.push_back(family_claim("thm-2.2", ClaimKind::proven, "Set-graph G(n) has chi = 2^(n-1).",
                           family_items(set_graphs), family_describe(set_graphs), set_graph_chi));
  r.push_back(family_claim("thm-2.3", ClaimKind::proven, "Set-graphs are perfect.", family_items(set_graphs),
                           family_describe(set_graphs), set_graph_perfect));
  r.push_back(family_claim("thm-2.3-alpha", ClaimKind::suspect,
                           "Set-graph G(n) has a unique maximum independent set, of size 2^(n-1) - 1.",
                           family_items(set_graphs), family_describe(set_graphs), set_graph_unique_alpha));
  r.push_back(family_claim("alpha-set-graph", ClaimKind::proven, "Set-graph G(n) has alpha = n.",
                           family_items(set_graphs), family_describe(set_graphs), set_graph_alpha));
  {
    const FamilyRange rainbow_range{"set-graph", 1, 4, 1, 4};
    r.push_back(family_claim("thm-2.5", ClaimKind::proven, "Set-graph G(n) has r- = r+ = 2^n - 1.",
                             family_items(rainbow_range), family_describe(rainbow_range), set_graph_rainbow));
  }
  r.push_back(family_claim(
      "r-basic-families", ClaimKind::proven,
      "Null graphs, complete graphs, paths and even cycles of order n have r- = r+ = n.",
      [](const Scope& scope) {
        std::vector<ClaimItem> out;
        const std::vector<FamilyRange> families = {{"null", 1, 6, 1, 20},
                                                   {"complete", 1, 6, 1, 20},
                                                   {"path", 1, 8, 1, 20},
                                                   {"cycle", 4, 8, 4, 20, even}};
        for (const auto& f : families) {
          auto items = family_items(f)(scope);
          out.insert(out.end(), items.begin(), items.end());
        }
        return out;
      },
      [](const Scope& scope) {
        return Json{{"families", {"null", "complete", "path", "cycle (even)"}},
                    {"n", scope.range ? range_json(*scope.range) : Json("per family")}};
      },
      rainbow_equals_order));
  r.push_back(corpus_claim("r-bipartite", ClaimKind::proven, "A connected bipartite graph of order n has r- = r+ = n.",
                           r_bipartite));
  r.push_back(corpus_claim("obs-delta", ClaimKind::suspect, "chi <= delta + 1 if and only if r- = n.", obs_delta));
  r.push_back(family_claim(
      "obs-delta-families", ClaimKind::suspect,
      "Set-graphs and paths have chi = delta + 1; even cycles have chi < delta + 1.",
      [set_graphs](const Scope& scope) {
        std::vector<ClaimItem> out;
        for (const FamilyRange& f : {set_graphs, FamilyRange{"path", 2, 8, 2, kMaxOrder},
                                     FamilyRange{"cycle", 3, 9, 3, kMaxOrder}}) {
          auto items = family_items(f)(scope);
          out.insert(out.end(), items.begin(), items.end());
        }
        return out;
      },
      [](const Scope& scope) {
        return Json{{"families", {"set-graph", "path", "cycle"}},
                    {"n", scope.range ? range_json(*scope.range) : Json("per family")}};
      },
      delta_bound_families));

  auto same = [](int, int chi) { return chi; };
  auto plus_one = [](int, int chi) { return chi + 1; };
  r.push_back(family_claim("prop-3.1a", ClaimKind::suspect, "Set-graphs with n >= 3 have chi_imax = chi + 1.",
                           family_items(kProp31a), family_describe(kProp31a), imax_item(plus_one)));
  r.push_back(family_claim("prop-3.1b", ClaimKind::suspect,
                           "Paths have chi_imax = chi + 1 = 3 if and only if n >= 4 and n is even.",
                           family_items(kProp31b), family_describe(kProp31b),
                           imax_item([](int n, int chi) { return n >= 4 && even(n) ? 3 : chi; })));
  r.push_back(family_claim("prop-3.1c", ClaimKind::suspect, "Odd paths with n >= 5 have chi_imax = chi = 2.",
                           family_items(kProp31c), family_describe(kProp31c),
                           imax_item([](int, int) { return 2; })));
  r.push_back(family_claim("prop-3.1d", ClaimKind::suspect, "Cycles have chi_imax = chi.", family_items(kProp31d),
                           family_describe(kProp31d), imax_item(same)));
  r.push_back(family_claim("prop-3.1e", ClaimKind::suspect, "Sunlets have chi_imax = chi + 1.",
                           family_items(kProp31e), family_describe(kProp31e), imax_item(plus_one)));
  r.push_back(family_claim("prop-3.1f", ClaimKind::suspect, "Odd empty-suns have chi_imax = chi + 1 = 4.",
                           family_items(kProp31f), family_describe(kProp31f), imax_item([](int, int) { return 4; })));
  r.push_back(family_claim("prop-3.1g", ClaimKind::suspect, "Even empty-suns with n >= 4 have chi_imax = chi = 3.",
                           family_items(kProp31g), family_describe(kProp31g), imax_item([](int, int) { return 3; })));
  r.push_back(family_claim(
      "prop-3.1h", ClaimKind::suspect, "Thorn complete graphs (t_i = i) have chi_imax = n + 1.",
      [](const Scope& scope) { return thorn_items(scope, 3, 6, kThornHard, {0}); },
      thorn_describe(3, 6, kThornHard, {"t_i = i"}), imax_item([](int n, int) { return n + 1; })));
  r.push_back(corpus_claim("cor-3.2", ClaimKind::suspect,
                           "Attaching one pendant to every vertex raises chi_imax by exactly one.", cor_3_2));
  r.push_back(corpus_claim("thm-3.3", ClaimKind::suspect,
                           "The convention peeling (ties by ascending mask) uses exactly chi colours.", thm_3_3));
  r.push_back(corpus_claim("thm-3.3-any", ClaimKind::suspect,
                           "Some tie-break sequence of the convention peeling uses exactly chi colours.", thm_3_3_any));
  r.push_back(corpus_claim("cor-3.4", ClaimKind::proven,
                           "Both peelings give proper colourings with maximum classes and at least chi colours.",
                           cor_3_4));
  r.push_back(corpus_claim("thm-3.5", ClaimKind::suspect, "Order >= 2 and alpha = chi imply chi_imax = chi + 1.",
                           thm_3_5));
  r.push_back(family_claim(
      "ex-1", ClaimKind::suspect,
      "Thorn complete graphs have chi = n and the stated colouring is a minimum proper colouring that follows the "
      "convention peeling.",
      [](const Scope& scope) { return thorn_items(scope, 3, 6, 8, {0, 1}); },
      thorn_describe(3, 6, 8, {"t_i = i", "t_i = i + 1"}), example_1));
  r.push_back(family_claim(
      "imax-gap", ClaimKind::suspect, "chi_imax - chi is 0 or 1 on every family of the chi_imax table.",
      prop_3_1_family_items,
      [](const Scope& scope) {
        return Json{{"families", {"set-graph", "path", "cycle", "sunlet", "empty-sun", "thorn-complete"}},
                    {"n", scope.range ? range_json(*scope.range) : Json("per family")}};
      },
      imax_gap));
  r.push_back(corpus_claim("conj-2.4", ClaimKind::conjecture,
                           "A weakly perfect graph whose every vertex lies in a maximum clique is perfect.", conj_2_4));
  return r;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

}  // namespace setgraph
