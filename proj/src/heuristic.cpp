#include "frontier/heuristic.hpp"

#include <algorithm>
#include <cmath>

#include "frontier/errors.hpp"
#include "frontier/hopfield.hpp"
#include "frontier/repair.hpp"
#include "frontier/rng.hpp"

namespace frontier {

void HeuristicConfig::check() const {
  if (!(lambda_step > 0.0 && lambda_step <= 1.0))
    throw DomainError("lambda step must lie in (0,1]");
  if (population_size < 2) throw DomainError("population size must be at least 2");
  if (repetitions < 1) throw DomainError("repetitions must be at least 1");
  if (!(gain_divisor > 0.0 && gain_divisor < 1.0))
    throw DomainError("gain divisor must lie in (0,1)");
  if (outer_iterations && *outer_iterations < 1)
    throw DomainError("outer iterations must be at least 1");
  if (inner_repetitions && *inner_repetitions < 1)
    throw DomainError("inner repetitions must be at least 1");
}

bool ParetoArchive::insert(FrontierRecord record) {
  const double v = record.variance;
  const double r = record.mean_return;
  auto pos = std::lower_bound(points_.begin(), points_.end(), v,
                              [](const FrontierRecord& p, double value) {
                                return p.variance < value;
                              });
  // The predecessor has strictly smaller variance and the largest
  // return left of the newcomer; it decides dominance from the left.
  if (pos != points_.begin() && std::prev(pos)->mean_return >= r) return false;
  if (pos != points_.end() && pos->variance == v && pos->mean_return >= r) return false;

  auto last = pos;
  while (last != points_.end() && last->mean_return <= r) ++last;
  if (pos != last) {
    *pos = std::move(record);
    points_.erase(std::next(pos), last);
  } else {
    points_.insert(pos, std::move(record));
  }
  return true;
}

double starting_gain(double min_objective) {
  if (min_objective == 0.0) return 100.0;
  return std::max(1.0, std::floor(10.0 / std::abs(min_objective)));
}

namespace {

FrontierRecord make_record(const PortfolioProblem& problem, const std::string& source_tag,
                           const Portfolio& portfolio, const PortfolioStats& stats) {
  FrontierRecord record;
  record.lambda = problem.risk_aversion;
  record.mean_return = stats.mean_return;
  record.variance = stats.variance;
  record.objective = stats.objective;
  record.source = source_tag;
  record.weights.reserve(portfolio.selection.size());
  for (std::size_t s = 0; s < portfolio.selection.size(); ++s) {
    const double w = portfolio.weights[static_cast<Index>(s)];
    if (w > 0.0)
      record.weights.emplace_back(static_cast<int>(portfolio.selection[s]) + 1, w);
  }
  return record;
}

PortfolioStats evaluate_stats(const PortfolioProblem& problem, const Portfolio& portfolio) {
  const VectorXd dense = dense_weights(problem.universe.size(), portfolio);
  const RiskReturn rr = portfolio_stats(problem.universe, dense);
  PortfolioStats stats;
  stats.mean_return = rr.mean_return;
  stats.variance = rr.variance;
  stats.objective =
      problem.risk_aversion * rr.variance - (1.0 - problem.risk_aversion) * rr.mean_return;
  return stats;
}

} // namespace

std::vector<Portfolio> initialise_population(const PortfolioProblem& problem, int count,
                                             std::mt19937_64& rng) {
  if (count < 1) throw DomainError("population size must be at least 1");
  const Index n = problem.universe.size();
  const Index k = problem.constraints.cardinality;

  std::vector<Portfolio> population;
  population.reserve(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    Portfolio p;
    p.selection = sample_without_replacement(n, k, rng);
    std::sort(p.selection.begin(), p.selection.end());
    VectorXd raw(k);
    for (Index s = 0; s < k; ++s) raw[s] = uniform01(rng);
    p.weights = repair(problem.constraints, p.selection, raw);
    p.stats = evaluate_stats(problem, p);
    population.push_back(std::move(p));
  }
  return population;
}

void evaluate_into_archive(const PortfolioProblem& problem, const std::string& source_tag,
                           Portfolio& portfolio, ParetoArchive& archive) {
  portfolio.weights = repair(problem.constraints, portfolio.selection, portfolio.weights);
  const PortfolioStats stats = evaluate_stats(problem, portfolio);
  portfolio.stats = stats;
  archive.count_evaluation();
  archive.insert(make_record(problem, source_tag, portfolio, stats));
}

void run_lambda(const PortfolioProblem& problem, const HeuristicConfig& config,
                std::mt19937_64& rng, ParetoArchive& archive) {
  config.check();
  const Index n = problem.universe.size();
  const Index k = problem.constraints.cardinality;
  const int population_size = config.population_size;

  std::vector<Portfolio> population = initialise_population(problem, population_size, rng);
  double best_objective = population.front().stats->objective;
  for (Portfolio& member : population) {
    evaluate_into_archive(problem, config.source_tag, member, archive);
    best_objective = std::min(best_objective, member.stats->objective);
  }

  double gain = starting_gain(best_objective);
  const int outer = config.outer_iterations.value_or(population_size / 2);
  const int inner = config.inner_repetitions.value_or(static_cast<int>(2 * n));

  std::vector<Index> all_assets(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) all_assets[static_cast<std::size_t>(i)] = i;

  for (int t = 0; t < outer; ++t) {
    for (int r = 0; r < inner; ++r) {
      const auto chosen =
          static_cast<std::size_t>(uniform_below(rng, static_cast<std::uint64_t>(population_size)));

      // Lift the chosen member to a full-size network state: selected
      // assets keep their repaired weights, the rest start at their
      // lower bound.
      VectorXd state = problem.constraints.lower;
      for (std::size_t s = 0; s < population[chosen].selection.size(); ++s)
        state[population[chosen].selection[s]] = population[chosen].weights[static_cast<Index>(s)];

      HopfieldNetwork network(problem.universe, problem.constraints, problem.risk_aversion,
                              all_assets, state, gain);
      for (Index live = n; live > k; --live) {
        network.relax(rng);
        network.prune_worst();
      }
      network.relax(rng);

      Portfolio candidate;
      candidate.selection = network.active();
      candidate.weights = network.state();
      evaluate_into_archive(problem, config.source_tag, candidate, archive);

      auto worst = std::max_element(population.begin(), population.end(),
                                    [](const Portfolio& a, const Portfolio& b) {
                                      return a.stats->objective < b.stats->objective;
                                    });
      *worst = std::move(candidate);
    }
    gain /= config.gain_divisor;
  }
}

std::vector<double> lambda_grid(double step) {
  std::vector<double> grid;
  for (int j = 0;; ++j) {
    const double lambda = std::min(1.0, j * step);
    grid.push_back(lambda);
    if (lambda >= 1.0) break;
  }
  return grid;
}

ParetoArchive run(const AssetUniverse& universe, const PortfolioConstraints& constraints,
                  const HeuristicConfig& config) {
  config.check();
  constraints.check(universe.size());

  const std::vector<double> grid = lambda_grid(config.lambda_step);
  ParetoArchive archive;
  for (int rep = 0; rep < config.repetitions; ++rep) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      PortfolioProblem problem(universe, constraints, grid[j]);
      std::mt19937_64 rng = make_stream(config.seed, static_cast<std::uint64_t>(rep),
                                        static_cast<std::uint64_t>(j));
      run_lambda(problem, config, rng, archive);
    }
  }
  return archive;
}

} // namespace frontier
