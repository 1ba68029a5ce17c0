#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "setgraph/colourings.hpp"
#include "setgraph/invariants.hpp"
#include "setgraph/perfection.hpp"
#include "setgraph/rainbow.hpp"

namespace setgraph {

using Json = nlohmann::ordered_json;

Json to_json(VertexSet s);
/// {"colours": [...], "classes": [[...]], "weights": [...]}
Json to_json(const Colouring& c);
Json to_json(const PeelResult& p);
Json to_json(const InvariantReport& r);
Json to_json(const RainbowReport& r);
Json to_json(const RainbowBounds& b);
Json to_json(const PerfectionReport& r);

struct GraphReportOptions {
  ChromaticOptions chromatic;
  std::uint64_t partition_budget = 10'000'000;
  std::uint64_t peel_budget = 2'000'000;
};

/// Full invariant bundle for one graph. Fields whose computation hit a budget are null and
/// `partial` is set.
struct GraphReport {
  Json json;
  bool partial = false;
};

GraphReport graph_report(const Graph& g, const GraphReportOptions& options = {});

/// Fixed CSV column order for graph reports.
const std::vector<std::string>& graph_report_csv_columns();
std::string graph_report_csv_header();
std::string graph_report_csv_row(const Json& report);

}  // namespace setgraph
