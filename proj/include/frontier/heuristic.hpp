#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frontier/model.hpp"

namespace frontier {

struct HeuristicConfig {
  double lambda_step = 0.1;  // risk-aversion grid increment
  int population_size = 40;  // portfolios kept alive per lambda
  int repetitions = 1;       // independent restarts of the whole sweep
  std::uint64_t seed = 0;
  double gain_divisor = 0.95; // gain <- gain / divisor after each outer round
  std::optional<int> outer_iterations;   // default population_size / 2
  std::optional<int> inner_repetitions;  // default 2 * asset count
  std::string source_tag = "NN";

  void check() const;
};

/// Set of mutually nondominated frontier points plus a counter of every
/// portfolio evaluation that fed it. Points are kept sorted by
/// ascending variance (returns then ascend too); an exact duplicate of
/// an existing (variance, return) pair is not inserted twice.
class ParetoArchive {
public:
  /// Inserts unless dominated by (or equal to) an existing point;
  /// removes the points the newcomer dominates. Returns true if kept.
  bool insert(FrontierRecord record);

  const std::vector<FrontierRecord>& points() const { return points_; }
  std::uint64_t evaluations() const { return evaluations_; }
  void count_evaluation() { ++evaluations_; }

private:
  std::vector<FrontierRecord> points_;
  std::uint64_t evaluations_ = 0;
};

/// Initial sigmoid gain, scaled to the size of the best objective seen:
/// max(1, floor(10 / |best|)), or 100 when the best objective is 0.
double starting_gain(double min_objective);

/// `count` random portfolios: cardinality-many distinct assets each,
/// uniform raw weights pushed through repair, stats evaluated.
std::vector<Portfolio> initialise_population(const PortfolioProblem& problem, int count,
                                             std::mt19937_64& rng);

/// Repairs the portfolio's weights in place, evaluates its stats, and
/// offers the result to the archive (counting one evaluation either
/// way).
void evaluate_into_archive(const PortfolioProblem& problem, const std::string& source_tag,
                           Portfolio& portfolio, ParetoArchive& archive);

/// One full anneal at a fixed risk aversion: random population, then
/// outer gain rounds of inner candidate passes. Each candidate lifts a
/// random member to a full network (unselected assets enter at their
/// lower bound), relaxes and prunes down to the required cardinality,
/// and replaces the worst member unconditionally.
void run_lambda(const PortfolioProblem& problem, const HeuristicConfig& config,
                std::mt19937_64& rng, ParetoArchive& archive);

/// Sweeps lambda over {0, step, 2*step, ..., 1} for every repetition,
/// with a deterministic RNG stream per (repetition, lambda) cell, all
/// feeding one shared archive.
ParetoArchive run(const AssetUniverse& universe, const PortfolioConstraints& constraints,
                  const HeuristicConfig& config);

/// The lambda grid run() visits.
std::vector<double> lambda_grid(double step);

} // namespace frontier
