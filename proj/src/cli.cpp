#include "frontier/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frontier/data_io.hpp"
#include "frontier/errors.hpp"
#include "frontier/exact_frontier.hpp"
#include "frontier/heuristic.hpp"
#include "frontier/manifest.hpp"
#include "frontier/metrics.hpp"
#include "frontier/model.hpp"

namespace frontier {

namespace {

// Flag-level mistakes that CLI11's own validators cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
}

PortfolioConstraints resolve_constraints(Index n, int k, double eps, double delta_max,
                                         const std::string& bounds_path) {
  PortfolioConstraints constraints;
  constraints.cardinality = k;
  constraints.lower = VectorXd::Constant(n, eps);
  constraints.upper = VectorXd::Constant(n, delta_max);
  if (!bounds_path.empty()) {
    std::ifstream in(bounds_path);
    if (!in) throw Error("cannot open bounds file '" + bounds_path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream fields(line);
      long asset;
      double lo, hi;
      if (!(fields >> asset)) continue; // blank line
      if (!(fields >> lo >> hi))
        throw ParseError(line_no, "expected 'asset lower upper'");
      if (asset < 1 || asset > n)
        throw ParseError(line_no, "asset index out of range [1," + std::to_string(n) + "]");
      constraints.lower[asset - 1] = lo;
      constraints.upper[asset - 1] = hi;
    }
  }
  constraints.check(n);
  return constraints;
}

// Every k-subset must admit a unit budget: the k largest lower bounds
// may not exceed 1 and the k smallest upper bounds must reach 1.
void check_bounds_feasible(const PortfolioConstraints& constraints) {
  VectorXd lower = constraints.lower;
  VectorXd upper = constraints.upper;
  std::sort(lower.begin(), lower.end(), std::greater<>());
  std::sort(upper.begin(), upper.end());
  const Index k = constraints.cardinality;
  const double max_lower = lower.head(k).sum();
  const double min_upper = upper.head(k).sum();
  if (max_lower > 1.0)
    throw InfeasibleError("infeasible bounds: the " + std::to_string(k) +
                          " largest lower bounds sum to " + format_double(max_lower) +
                          " > 1, so some selections cannot meet the budget");
  if (min_upper < 1.0)
    throw InfeasibleError("infeasible bounds: the " + std::to_string(k) +
                          " smallest upper bounds sum to " + format_double(min_upper) +
                          " < 1, so some selections cannot meet the budget");
}

std::optional<std::uint64_t> evaluations_from_manifest(const std::string& frontier_path) {
  std::ifstream in(frontier_path + ".manifest");
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("evaluations=", 0) == 0) {
      try {
        return std::stoull(line.substr(12));
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

struct ExactArgs {
  std::string data;
  std::string out;
  int lambdas = 0;
};

int run_exact(const ExactArgs& args) {
  Stopwatch timer;
  const AssetUniverse universe = load_orlib(args.data);
  const StandardFrontier frontier = trace_standard_frontier(universe, args.lambdas);
  save_frontier(frontier.points, args.out);

  double max_gap = 0.0;
  for (const SolveDiagnostics& d : frontier.diagnostics) max_gap = std::max(max_gap, d.gap);

  Manifest manifest;
  manifest.add("command", std::string("exact"));
  manifest.add("version", std::string(kToolVersion));
  manifest.add("data", args.data);
  manifest.add_file_digest("data_digest", args.data);
  manifest.add("lambdas", static_cast<std::uint64_t>(args.lambdas));
  manifest.add("points", static_cast<std::uint64_t>(frontier.points.size()));
  manifest.add("max_duality_gap", max_gap);
  manifest.add("out", args.out);
  manifest.add_file_digest("out_digest", args.out);
  manifest.add("duration_seconds", timer.seconds());
  manifest.save(args.out + ".manifest");

  std::cout << "standard frontier: " << frontier.points.size() << " points from " << args.lambdas
            << " lambdas -> " << args.out << '\n';
  return 0;
}

struct NnArgs {
  std::string data;
  std::string out;
  std::string bounds;
  int k = 0;
  double eps = 0.0;
  double delta_max = 1.0;
  double dlambda = 0.1;
  int pop = 40;
  int reps = 1;
  std::uint64_t seed = 0;
};

int run_nn(const NnArgs& args) {
  Stopwatch timer;
  const AssetUniverse universe = load_orlib(args.data);
  const PortfolioConstraints constraints =
      resolve_constraints(universe.size(), args.k, args.eps, args.delta_max, args.bounds);
  check_bounds_feasible(constraints);

  HeuristicConfig config;
  config.lambda_step = args.dlambda;
  config.population_size = args.pop;
  config.repetitions = args.reps;
  config.seed = args.seed;
  config.check();

  const ParetoArchive archive = run(universe, constraints, config);
  save_frontier(archive.points(), args.out);

  Manifest manifest;
  manifest.add("command", std::string("nn"));
  manifest.add("version", std::string(kToolVersion));
  manifest.add("data", args.data);
  manifest.add_file_digest("data_digest", args.data);
  if (!args.bounds.empty()) {
    manifest.add("bounds", args.bounds);
    manifest.add_file_digest("bounds_digest", args.bounds);
  }
  manifest.add("k", static_cast<std::uint64_t>(args.k));
  manifest.add("eps", args.eps);
  manifest.add("delta_max", args.delta_max);
  manifest.add("dlambda", args.dlambda);
  manifest.add("pop", static_cast<std::uint64_t>(args.pop));
  manifest.add("reps", static_cast<std::uint64_t>(args.reps));
  manifest.add("seed", args.seed);
  manifest.add("evaluations", archive.evaluations());
  manifest.add("points", static_cast<std::uint64_t>(archive.points().size()));
  manifest.add("out", args.out);
  manifest.add_file_digest("out_digest", args.out);
  manifest.add("duration_seconds", timer.seconds());
  manifest.save(args.out + ".manifest");

  std::cout << "heuristic frontier: " << archive.points().size() << " points from "
            << archive.evaluations() << " evaluations -> " << args.out << '\n';
  return 0;
}

struct MetricsArgs {
  std::string standard;
  std::string heuristic;
  std::string out;
  std::string csv;
  std::optional<std::uint64_t> evaluations;
};

int run_metrics(const MetricsArgs& args) {
  Stopwatch timer;
  const std::vector<FrontierRecord> standard = pareto_filter(load_frontier(args.standard));
  const std::vector<FrontierRecord> heuristic = load_frontier(args.heuristic);
  if (heuristic.empty()) throw Error("heuristic frontier '" + args.heuristic + "' is empty");

  std::optional<std::uint64_t> evaluations = args.evaluations;
  if (!evaluations) evaluations = evaluations_from_manifest(args.heuristic);

  write_text(args.out, render_comparison_report(standard, heuristic, evaluations));
  if (!args.csv.empty())
    write_text(args.csv, render_comparison_csv(standard, heuristic, evaluations));

  Manifest manifest;
  manifest.add("command", std::string("metrics"));
  manifest.add("version", std::string(kToolVersion));
  manifest.add("standard", args.standard);
  manifest.add_file_digest("standard_digest", args.standard);
  manifest.add("heuristic", args.heuristic);
  manifest.add_file_digest("heuristic_digest", args.heuristic);
  if (evaluations) manifest.add("evaluations", *evaluations);
  manifest.add("out", args.out);
  manifest.add_file_digest("out_digest", args.out);
  if (!args.csv.empty()) {
    manifest.add("csv", args.csv);
    manifest.add_file_digest("csv_digest", args.csv);
  }
  manifest.add("duration_seconds", timer.seconds());
  manifest.save(args.out + ".manifest");

  std::cout << "metrics report -> " << args.out << '\n';
  return 0;
}

struct MergeArgs {
  std::string standard;
  std::string out;
  std::string report;
  std::string report_csv;
  std::vector<std::string> inputs;
};

int run_merge(const MergeArgs& args) {
  Stopwatch timer;
  const std::vector<FrontierRecord> standard = pareto_filter(load_frontier(args.standard));

  std::map<std::string, std::vector<FrontierRecord>> named;
  for (const std::string& spec : args.inputs) {
    const std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
      throw UsageError("--inputs entries must look like tag=file, got '" + spec + "'");
    const std::string tag = spec.substr(0, eq);
    if (named.count(tag)) throw UsageError("duplicate source tag '" + tag + "'");
    named[tag] = load_frontier(spec.substr(eq + 1));
  }

  bool any = false;
  for (const auto& [tag, records] : named) any = any || !records.empty();
  if (!any) throw Error("all merge inputs are empty");

  const MergedFrontier merged = merge_frontiers(named);
  save_frontier(merged.points, args.out);
  write_text(args.report, render_merge_report(merged, standard));
  if (!args.report_csv.empty())
    write_text(args.report_csv, render_merge_csv(merged, standard));

  Manifest manifest;
  manifest.add("command", std::string("merge"));
  manifest.add("version", std::string(kToolVersion));
  manifest.add("standard", args.standard);
  manifest.add_file_digest("standard_digest", args.standard);
  for (const std::string& spec : args.inputs) {
    const std::size_t eq = spec.find('=');
    manifest.add("input_" + spec.substr(0, eq), spec.substr(eq + 1));
    manifest.add_file_digest("input_" + spec.substr(0, eq) + "_digest", spec.substr(eq + 1));
  }
  manifest.add("merged_points", static_cast<std::uint64_t>(merged.points.size()));
  manifest.add("out", args.out);
  manifest.add_file_digest("out_digest", args.out);
  manifest.add("report", args.report);
  manifest.add_file_digest("report_digest", args.report);
  if (!args.report_csv.empty()) {
    manifest.add("report_csv", args.report_csv);
    manifest.add_file_digest("report_csv_digest", args.report_csv);
  }
  manifest.add("duration_seconds", timer.seconds());
  manifest.save(args.out + ".manifest");

  std::cout << "merged frontier: " << merged.points.size() << " points -> " << args.out << '\n';
  return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Efficient-frontier toolkit for cardinality-constrained portfolio selection"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  ExactArgs exact_args;
  CLI::App* exact = app.add_subcommand(
      "exact", "Trace the standard (unconstrained-cardinality) frontier exactly");
  exact->add_option("--data", exact_args.data, "Universe file (OR-Library portfolio format)")
      ->required();
  exact->add_option("--lambdas", exact_args.lambdas, "Number of risk-aversion grid points (>= 2)")
      ->required()
      ->check(CLI::Range(2, std::numeric_limits<int>::max()));
  exact->add_option("--out", exact_args.out, "Output frontier CSV")->required();

  NnArgs nn_args;
  CLI::App* nn = app.add_subcommand(
      "nn", "Trace the cardinality-constrained frontier with the annealed network heuristic");
  nn->add_option("--data", nn_args.data, "Universe file (OR-Library portfolio format)")
      ->required();
  nn->add_option("--k", nn_args.k, "Number of assets each portfolio must hold")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  nn->add_option("--eps", nn_args.eps, "Lower investment bound for every asset")->required();
  nn->add_option("--delta-max", nn_args.delta_max, "Upper investment bound for every asset")
      ->required();
  nn->add_option("--dlambda", nn_args.dlambda, "Risk-aversion grid step in (0,1]")
      ->default_val(0.1);
  nn->add_option("--pop", nn_args.pop, "Population size (>= 2)")->default_val(40);
  nn->add_option("--reps", nn_args.reps, "Independent repetitions of the sweep")->default_val(1);
  nn->add_option("--seed", nn_args.seed, "RNG seed")->default_val(0);
  nn->add_option("--bounds", nn_args.bounds,
                 "Optional per-asset bounds file with 'asset lower upper' lines");
  nn->add_option("--out", nn_args.out, "Output frontier CSV")->required();

  MetricsArgs metrics_args;
  std::uint64_t evaluations_flag = 0;
  CLI::App* metrics = app.add_subcommand(
      "metrics", "Compare a heuristic frontier against the standard frontier");
  metrics->add_option("--standard", metrics_args.standard, "Standard frontier CSV")->required();
  metrics->add_option("--heuristic", metrics_args.heuristic, "Heuristic frontier CSV")
      ->required();
  CLI::Option* eval_opt = metrics->add_option(
      "--evaluations", evaluations_flag,
      "Evaluation count for persistence (otherwise read from the heuristic's manifest)");
  metrics->add_option("--out", metrics_args.out, "Output report (plain text)")->required();
  metrics->add_option("--csv", metrics_args.csv, "Optional machine-readable metrics CSV");

  MergeArgs merge_args;
  CLI::App* merge = app.add_subcommand(
      "merge", "Merge tagged heuristic frontiers and report survival statistics");
  merge->add_option("--standard", merge_args.standard, "Standard frontier CSV")->required();
  merge->add_option("--inputs", merge_args.inputs, "Tagged frontiers as tag=file")
      ->required()
      ->expected(-1);
  merge->add_option("--out", merge_args.out, "Merged frontier CSV")->required();
  merge->add_option("--report", merge_args.report, "Merge report (plain text)")->required();
  merge->add_option("--report-csv", merge_args.report_csv,
                    "Optional machine-readable merge report CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*exact) return run_exact(exact_args);
    if (*nn) {
      if (!(nn_args.dlambda > 0.0 && nn_args.dlambda <= 1.0))
        throw UsageError("--dlambda must lie in (0,1]");
      if (nn_args.pop < 2) throw UsageError("--pop must be at least 2");
      if (nn_args.reps < 1) throw UsageError("--reps must be at least 1");
      return run_nn(nn_args);
    }
    if (*metrics) {
      if (*eval_opt) metrics_args.evaluations = evaluations_flag;
      return run_metrics(metrics_args);
    }
    if (*merge) return run_merge(merge_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

} // namespace frontier
