#include "setgraph/report.hpp"

#include <sstream>

#include "setgraph/errors.hpp"
#include "setgraph/graph6.hpp"
#include "setgraph/partitions.hpp"

namespace setgraph {

Json to_json(VertexSet s) { return s.members(); }

Json to_json(const Colouring& c) {
  Json classes = Json::array();
  for (VertexSet cls : c.classes()) classes.push_back(to_json(cls));
  return Json{{"colours", c.assignment()}, {"classes", classes}, {"weights", c.weights()}};
}

Json to_json(const PeelResult& p) {
  Json out = to_json(p.colouring);
  out["num_colours"] = p.colouring.num_colours();
  Json trace = Json::array();
  for (const auto& round : p.trace)
    trace.push_back({{"iteration", round.iteration},
                     {"chosen", to_json(round.chosen)},
                     {"residual_alpha", round.residual_alpha},
                     {"tied_candidates", round.tied_candidates}});
  out["trace"] = trace;
  if (p.range)
    out["exhaustive"] = {{"min_colours", p.range->min}, {"max_colours", p.range->max}, {"states", p.range->branches}};
  return out;
}

Json to_json(const InvariantReport& r) {
  return {{"order", r.order},
          {"size", r.size},
          {"omega", r.omega},
          {"alpha", r.alpha},
          {"chi", r.chi},
          {"max_clique_count", r.max_clique_count},
          {"max_independent_set_count", r.max_independent_set_count},
          {"min_degree", r.min_degree},
          {"max_degree", r.max_degree}};
}

Json to_json(const RainbowReport& r) {
  return {{"r", r.r}, {"rainbow_vertices", to_json(r.rainbow_vertices)}, {"colouring", to_json(r.colouring)}};
}

Json to_json(const RainbowBounds& b) {
  return {{"r_minus", b.r_minus},
          {"r_plus", b.r_plus},
          {"exact", b.exact},
          {"partitions_scanned", b.partitions_scanned},
          {"witness_min", to_json(b.witness_min)},
          {"witness_max", to_json(b.witness_max)}};
}

namespace {

Json verdict_json(const PerfectionVerdict& v) {
  Json out = {{"perfect", v.perfect}};
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  out["antihole"] = v.antihole;
  return out;
}

}  // namespace

Json to_json(const PerfectionReport& r) {
  Json out = {{"weakly_perfect", r.weakly_perfect}};
  out["perfect_bruteforce"] = r.bruteforce ? verdict_json(*r.bruteforce) : Json("skipped");
  out["perfect_hole_based"] = verdict_json(r.hole_based);
  out["every_vertex_in_max_clique"] = r.coverage.covered;
  out["uncovered_vertex"] = r.coverage.uncovered_vertex ? Json(*r.coverage.uncovered_vertex) : Json(nullptr);
  return out;
}

GraphReport graph_report(const Graph& g, const GraphReportOptions& options) {
  GraphReport out;
  Json& j = out.json;
  j["graph6"] = g6_encode(g);
  j["order"] = g.order();
  j["size"] = g.size();
  j["connected"] = is_connected(g);
  j["min_degree"] = g.order() ? Json(min_degree(g)) : Json(nullptr);
  j["omega"] = clique_number(g);
  j["max_clique_count"] = count_maximum_cliques(g);
  j["alpha"] = independence_number(g);
  j["max_independent_set_count"] = enumerate_maximum_independent_sets(g).size();

  auto guarded = [&](const char* key, auto&& compute) {
    try {
      j[key] = compute();
    } catch (const BudgetExceeded&) {
      j[key] = nullptr;
      out.partial = true;
    } catch (const std::out_of_range&) {
      j[key] = nullptr;
      out.partial = true;
    }
  };

  std::optional<int> chi;
  guarded("chi", [&] {
    chi = chromatic_number(g, options.chromatic);
    return *chi;
  });
  if (g.order() == 0) {
    j["chi_imax"] = 0;
    j["imax_number"] = 0;
    j["r_convention"] = 0;
    j["r_imax"] = 0;
  } else {
    std::optional<int> imax;
    guarded("chi_imax", [&] {
      imax = imax_colouring(g, {PeelMode::deterministic, options.peel_budget}).colouring.num_colours();
      return *imax;
    });
    j["imax_number"] = (chi && imax) ? Json(*imax - *chi) : Json(nullptr);
    guarded("r_convention", [&] { return rainbow_number(g, convention_colouring(g).colouring).r; });
    guarded("r_imax", [&] { return r_imax(g).r; });
  }
  j["r_minus"] = nullptr;
  j["r_plus"] = nullptr;
  j["r_bounds_exact"] = false;
  try {
    const RainbowBounds b = rainbow_bounds(g, options.partition_budget);
    j["r_minus"] = b.r_minus;
    j["r_plus"] = b.r_plus;
    j["r_bounds_exact"] = b.exact;
    if (!b.exact) out.partial = true;
  } catch (const std::out_of_range&) {
    out.partial = true;
  }
  guarded("perfection", [&] { return to_json(perfection_report(g)); });
  return out;
}

const std::vector<std::string>& graph_report_csv_columns() {
  static const std::vector<std::string> columns = {
      "graph6", "order", "size", "connected", "min_degree", "omega", "max_clique_count", "alpha",
      "max_independent_set_count", "chi", "chi_imax", "imax_number", "r_convention", "r_imax",
      "r_minus", "r_plus", "r_bounds_exact", "weakly_perfect", "perfect", "every_vertex_in_max_clique"};
  return columns;
}

std::string graph_report_csv_header() {
  std::string out;
  for (const auto& c : graph_report_csv_columns()) out += (out.empty() ? "" : ",") + c;
  return out;
}

std::string graph_report_csv_row(const Json& report) {
  auto cell = [](const Json& v) -> std::string {
    if (v.is_null()) return "";
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      if (s.find_first_of(",\"") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      return quoted + "\"";
    }
    return v.dump();
  };
  const Json& perfection = report.contains("perfection") ? report["perfection"] : Json(nullptr);
  std::ostringstream row;
  bool first = true;
  for (const auto& column : graph_report_csv_columns()) {
    Json value;
    if (column == "weakly_perfect" || column == "every_vertex_in_max_clique") {
      value = perfection.is_object() ? perfection[column] : Json(nullptr);
    } else if (column == "perfect") {
      value = perfection.is_object() ? perfection["perfect_hole_based"]["perfect"] : Json(nullptr);
    } else if (report.contains(column)) {
      value = report[column];
    }
    row << (first ? "" : ",") << cell(value);
    first = false;
  }
  return row.str();
}

}  // namespace setgraph
