// Command-line front end: family generation, invariant reports, colourings, rainbow
// numbers, perfection checks, the claim ledger and the conjecture search.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "setgraph/claims.hpp"
#include "setgraph/errors.hpp"
#include "setgraph/generators.hpp"
#include "setgraph/graph6.hpp"
#include "setgraph/parallel.hpp"
#include "setgraph/partitions.hpp"
#include "setgraph/report.hpp"

using namespace setgraph;

namespace {

constexpr int kUsageError = 64;
constexpr int kDataError = 65;
constexpr int kPartialReport = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string family;
  int n = -1;
  std::vector<int> thorns;
  std::string g6;
  std::string file;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--family", in.family, "Generated family")->check(CLI::IsMember(family_names()));
  cmd->add_option("-n", in.n, "Family parameter")->check(CLI::NonNegativeNumber);
  cmd->add_option("-t,--thorns", in.thorns, "Pendant counts for thorn-complete, comma separated")->delimiter(',');
  cmd->add_option("--g6", in.g6, "Graph in graph6 text");
  cmd->add_option("--file", in.file, "File of graph6 lines")->check(CLI::ExistingFile);
}

struct NamedGraph {
  std::string source;
  Graph graph;
};

/// Exactly one input source; malformed file lines go to stderr and set `bad_lines`.
std::vector<NamedGraph> read_input(const InputOptions& in, bool& bad_lines) {
  const int sources = !in.family.empty() + !in.g6.empty() + !in.file.empty();
  if (sources != 1) throw UsageError("give exactly one of --family, --g6, --file");
  if (!in.family.empty()) {
    if (in.n < 0) throw UsageError("--family needs -n");
    std::optional<ThornSpec> spec;
    if (!in.thorns.empty()) spec = ThornSpec(in.thorns);
    return {{in.family + " n=" + std::to_string(in.n), make_family(in.family, in.n, spec)}};
  }
  if (!in.g6.empty()) return {{in.g6, g6_decode(in.g6)}};
  std::ifstream file(in.file);
  Graph6File parsed = read_graph6_stream(file);
  for (const auto& e : parsed.errors) {
    std::cerr << in.file << ":" << e.line_number << ": " << e.message << "\n";
    bad_lines = true;
  }
  std::vector<NamedGraph> out;
  for (auto& line : parsed.graphs) out.push_back({in.file + ":" + std::to_string(line.line_number), line.graph});
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b");
  try {
    const int a = std::stoi(text.substr(0, dots));
    const int b = std::stoi(text.substr(dots + 2));
    if (a > b) throw UsageError("empty range " + text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like a..b");
  }
}

/// stdout unless --output is given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit_json_line(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-graph invariants, colourings and claim checks"};
  app.require_subcommand(1);

  std::string output;
  std::string format = "json";

  // gen
  auto* gen = app.add_subcommand("gen", "Print graph6 lines for a family member or range");
  std::string gen_family;
  int gen_n = -1;
  std::string gen_range;
  std::vector<int> gen_thorns;
  std::string gen_format = "g6";
  gen->add_option("family", gen_family, "Family name")->required()->check(CLI::IsMember(family_names()));
  gen->add_option("-n", gen_n, "Family parameter")->check(CLI::NonNegativeNumber);
  gen->add_option("--range", gen_range, "Parameter range a..b");
  gen->add_option("-t,--thorns", gen_thorns, "Pendant counts for thorn-complete")->delimiter(',');
  gen->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"g6"}));
  gen->add_option("-o,--output", output, "Output path");

  // invariants
  auto* inv = app.add_subcommand("invariants", "Full invariant report per input graph");
  InputOptions inv_in;
  GraphReportOptions report_options;
  add_input_options(inv, inv_in);
  inv->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  inv->add_option("-o,--output", output, "Output path");
  inv->add_option("--partition-budget", report_options.partition_budget, "Chromatic partitions per graph")
      ->check(CLI::PositiveNumber);
  inv->add_option("--node-budget", report_options.chromatic.node_budget, "Branch and bound nodes")
      ->check(CLI::PositiveNumber);
  inv->add_option("--peel-budget", report_options.peel_budget, "Residual states for exhaustive peeling")
      ->check(CLI::PositiveNumber);

  // colour
  auto* col = app.add_subcommand("colour", "Peeling colourings (maximax independence or convention)");
  InputOptions col_in;
  std::string rule = "imax";
  std::string mode = "deterministic";
  std::uint64_t peel_budget = 2'000'000;
  add_input_options(col, col_in);
  col->add_option("--rule", rule, "imax or convention")->check(CLI::IsMember({"imax", "convention"}));
  col->add_option("--mode", mode, "deterministic or exhaustive")->check(CLI::IsMember({"deterministic", "exhaustive"}));
  col->add_option("--budget", peel_budget, "Residual states for exhaustive mode")->check(CLI::PositiveNumber);
  col->add_option("-o,--output", output, "Output path");

  // rainbow
  auto* rain = app.add_subcommand("rainbow", "Rainbow neighbourhood numbers");
  InputOptions rain_in;
  std::uint64_t partition_budget = 10'000'000;
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;
  add_input_options(rain, rain_in);
  rain->add_option("--budget", partition_budget, "Chromatic partitions to enumerate")->check(CLI::PositiveNumber);
  rain->add_option("--samples", samples, "Also sample this many chromatic partitions (needs --seed)");
  rain->add_option("--seed", seed, "Sampling seed");
  rain->add_option("-o,--output", output, "Output path");

  // perfect
  auto* perf = app.add_subcommand("perfect", "Weak perfection, perfection (two checkers) and clique coverage");
  InputOptions perf_in;
  add_input_options(perf, perf_in);
  perf->add_option("-o,--output", output, "Output path");

  // claims
  auto* claims = app.add_subcommand("claims", "Run claim checks; one JSON line per claim");
  std::vector<std::string> claim_ids;
  bool all_claims = false;
  bool list_claims = false;
  Scope scope;
  std::string claim_range;
  bool all_graphs = false;
  bool canonical = false;
  bool timing = false;
  std::optional<int> jobs;
  claims->add_option("ids", claim_ids, "Claim identifiers (prop-3.1 expands to its items)");
  claims->add_flag("--all", all_claims, "Every registered claim");
  claims->add_flag("--list", list_claims, "List claim identifiers and exit");
  claims->add_option("--min-order", scope.min_order, "Smallest corpus order")->check(CLI::Range(1, 11));
  claims->add_option("--max-order", scope.max_order, "Largest corpus order")->check(CLI::Range(1, 11));
  claims->add_option("--partition-max-order", scope.partition_max_order,
                     "Largest corpus order for chromatic-partition checks")
      ->check(CLI::Range(0, 20));
  claims->add_option("--range", claim_range, "Family parameter range a..b");
  claims->add_option("--seed", scope.seed, "Seed for sampled checks");
  claims->add_option("--samples", scope.samples, "Partition samples when enumeration exceeds its budget")
      ->check(CLI::PositiveNumber);
  claims->add_option("--partition-budget", scope.partition_budget, "Chromatic partitions per graph")
      ->check(CLI::PositiveNumber);
  claims->add_option("--peel-budget", scope.peel_budget, "Residual states per exhaustive peeling")
      ->check(CLI::PositiveNumber);
  claims->add_option("--max-counterexamples", scope.max_counterexamples, "Witnesses kept per claim")
      ->check(CLI::PositiveNumber);
  claims->add_flag("--all-graphs", all_graphs, "Include disconnected graphs");
  claims->add_flag("--canonical", canonical, "One graph per isomorphism class (order <= 8)");
  claims->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  claims->add_flag("--timing", timing, "Include runtime_ms (breaks byte-identical output)");
  claims->add_option("-o,--output", output, "Output path");

  // conjecture
  auto* conj = app.add_subcommand("conjecture", "Counterexample search for the clique-cover perfection conjecture");
  Scope conj_scope;
  std::string random_orders;
  std::optional<std::uint64_t> conj_seed;
  bool conj_all_graphs = false;
  bool conj_canonical = false;
  bool conj_timing = false;
  std::optional<int> conj_jobs;
  conj->add_option("--max-order", conj_scope.max_order, "Largest order of the exhaustive corpus")
      ->check(CLI::Range(1, 8));
  conj->add_option("--min-order", conj_scope.min_order, "Smallest order")->check(CLI::Range(1, 8));
  conj->add_option("--random-orders", random_orders, "Random corpus over orders a..b instead (needs --seed)");
  conj->add_option("--samples", conj_scope.samples, "Random graphs in total")->check(CLI::PositiveNumber);
  conj->add_option("--seed", conj_seed, "Seed for the random corpus");
  conj->add_option("--max-counterexamples", conj_scope.max_counterexamples, "Witnesses kept")
      ->check(CLI::PositiveNumber);
  conj->add_flag("--all-graphs", conj_all_graphs, "Include disconnected graphs");
  conj->add_flag("--canonical", conj_canonical, "One graph per isomorphism class (order <= 8)");
  conj->add_option("--jobs", conj_jobs, "Worker threads")->check(CLI::PositiveNumber);
  conj->add_flag("--timing", conj_timing, "Include runtime_ms");
  conj->add_option("-o,--output", output, "Output path");

  CLI11_PARSE(app, argc, argv);

  try {
    Output out(output);
    std::ostream& os = out.stream();
    bool bad_lines = false;

    if (gen->parsed()) {
      if ((gen_n >= 0) == !gen_range.empty()) throw UsageError("give exactly one of -n, --range");
      auto [lo, hi] = gen_range.empty() ? std::pair{gen_n, gen_n} : parse_range(gen_range);
      std::optional<ThornSpec> spec;
      if (!gen_thorns.empty()) spec = ThornSpec(gen_thorns);
      for (int n = lo; n <= hi; ++n) os << g6_encode(make_family(gen_family, n, spec)) << "\n";
      return 0;
    }

    if (inv->parsed()) {
      bool partial = false;
      const auto graphs = read_input(inv_in, bad_lines);
      if (format == "csv") os << graph_report_csv_header() << "\n";
      for (const auto& [source, g] : graphs) {
        GraphReport r = graph_report(g, report_options);
        partial |= r.partial;
        if (format == "csv")
          os << graph_report_csv_row(r.json) << "\n";
        else
          emit_json_line(os, r.json);
      }
      if (bad_lines) return kDataError;
      return partial ? kPartialReport : 0;
    }

    if (col->parsed()) {
      const PeelRule peel_rule = rule == "imax" ? PeelRule::min_residual_alpha : PeelRule::max_residual_alpha;
      const PeelMode peel_mode = mode == "exhaustive" ? PeelMode::exhaustive : PeelMode::deterministic;
      for (const auto& [source, g] : read_input(col_in, bad_lines)) {
        Json j = {{"graph6", g6_encode(g)}, {"rule", rule}, {"mode", mode}};
        try {
          const PeelResult p = peel_colouring(g, peel_rule, {peel_mode, peel_budget});
          j["chi"] = chromatic_number(g);
          j["colouring"] = to_json(p);
          j["proper"] = is_proper(g, p.colouring);
          j["rainbow"] = to_json(rainbow_number(g, p.colouring));
        } catch (const BudgetExceeded& e) {
          j["skipped"] = e.what();
        }
        emit_json_line(os, j);
      }
      return bad_lines ? kDataError : 0;
    }

    if (rain->parsed()) {
      if (samples > 0 && !seed) throw UsageError("--samples needs --seed");
      bool partial = false;
      for (const auto& [source, g] : read_input(rain_in, bad_lines)) {
        Json j = {{"graph6", g6_encode(g)}};
        const RainbowBounds b = rainbow_bounds(g, partition_budget);
        partial |= !b.exact;
        j["bounds"] = to_json(b);
        if (g.order() > 0) {
          j["r_convention"] = rainbow_number(g, convention_colouring(g).colouring).r;
          j["r_imax"] = r_imax(g).r;
        }
        if (samples > 0) {
          int lo = g.order(), hi = 0;
          for (const Colouring& c : sample_chromatic_partitions(g, samples, *seed)) {
            const int r = rainbow_number(g, c).r;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
          }
          j["sampled"] = {{"samples", samples}, {"seed", *seed}, {"r_min", lo}, {"r_max", hi}};
        }
        emit_json_line(os, j);
      }
      if (bad_lines) return kDataError;
      return partial ? kPartialReport : 0;
    }

    if (perf->parsed()) {
      for (const auto& [source, g] : read_input(perf_in, bad_lines)) {
        Json j = {{"graph6", g6_encode(g)}};
        j["perfection"] = to_json(perfection_report(g));
        emit_json_line(os, j);
      }
      return bad_lines ? kDataError : 0;
    }

    if (claims->parsed()) {
      if (list_claims) {
        for (const Claim& c : claim_registry()) os << c.id << "\t" << to_string(c.kind) << "\t" << c.statement << "\n";
        return 0;
      }
      if (all_claims == !claim_ids.empty()) throw UsageError("give claim identifiers or --all");
      if (scope.min_order > scope.max_order) throw UsageError("--min-order exceeds --max-order");
      if (!claim_range.empty()) scope.range = parse_range(claim_range);
      scope.connected_only = !all_graphs;
      scope.dedup = canonical ? Dedup::canonical : Dedup::none;
      if (canonical && scope.max_order > kCanonicalOrderLimit) throw UsageError("--canonical needs --max-order <= 8");
      scope.jobs = jobs.value_or(default_jobs());
      const auto ids = expand_claim_ids(all_claims ? std::vector<std::string>{"all"} : claim_ids);
      std::vector<CheckResult> results;
      for (const auto& id : ids) {
        results.push_back(run_check(id, scope));
        emit_json_line(os, to_json(results.back(), timing));
        os.flush();
      }
      return triage_exit_code(results);
    }

    if (conj->parsed()) {
      if (!random_orders.empty()) {
        if (!conj_seed) throw UsageError("--random-orders needs --seed");
        conj_scope.random_orders = parse_range(random_orders);
      }
      if (conj_scope.min_order > conj_scope.max_order) throw UsageError("--min-order exceeds --max-order");
      conj_scope.seed = conj_seed.value_or(0);
      conj_scope.connected_only = !conj_all_graphs;
      conj_scope.dedup = conj_canonical ? Dedup::canonical : Dedup::none;
      if (!conj_canonical && conj_scope.max_order > 7 && random_orders.empty())
        throw UsageError("exhaustive labelled search needs --max-order <= 7 (use --canonical for 8)");
      conj_scope.jobs = conj_jobs.value_or(default_jobs());
      const CheckResult r = conjecture_search(conj_scope);
      emit_json_line(os, to_json(r, conj_timing));
      return triage_exit_code({r});
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
