#include "frontier/exact_frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frontier/errors.hpp"
#include "frontier/model.hpp"

namespace frontier {

QpSolution solve_qp_simplex(const AssetUniverse& universe, double risk_aversion,
                            double gap_tolerance, int max_iterations) {
  if (!(risk_aversion >= 0.0 && risk_aversion <= 1.0))
    throw DomainError("risk aversion must lie in [0,1]");
  if (!universe.mean_returns().allFinite() || !universe.covariance().allFinite())
    throw DomainError("universe contains non-finite values");

  const Index n = universe.size();
  const MatrixXd& sigma = universe.covariance();
  const VectorXd& mu = universe.mean_returns();

  QpSolution solution;
  VectorXd x = VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  VectorXd gradient(n), direction(n);

  for (int iter = 0; iter < max_iterations; ++iter) {
    gradient = 2.0 * risk_aversion * (sigma * x) - (1.0 - risk_aversion) * mu;

    Index toward = 0;
    gradient.minCoeff(&toward);
    const double gap = gradient.dot(x) - gradient[toward];
    solution.iterations = iter;
    solution.gap = gap;
    if (gap <= gap_tolerance) {
      solution.converged = true;
      break;
    }

    // Away vertex: the support coordinate whose gradient is largest.
    // With no quadratic term the plain toward-step is already finite and
    // exact, and skipping away steps preserves the lowest-index tie rule.
    bool away_step = false;
    Index away = -1;
    if (risk_aversion > 0.0) {
      double away_value = -std::numeric_limits<double>::infinity();
      for (Index i = 0; i < n; ++i) {
        if (x[i] > 0.0 && gradient[i] > away_value) {
          away_value = gradient[i];
          away = i;
        }
      }
      const double away_progress = away_value - gradient.dot(x);
      away_step = away_progress > gap && x[away] < 1.0;
    }
    double max_step;
    if (away_step) {
      direction = x;
      direction[away] -= 1.0;
      max_step = x[away] / (1.0 - x[away]);
    } else {
      direction = -x;
      direction[toward] += 1.0;
      max_step = 1.0;
    }

    const double slope = gradient.dot(direction); // negative for a descent direction
    const double curvature = 2.0 * risk_aversion * direction.dot(sigma * direction);
    double step;
    if (curvature <= 1e-18) {
      step = slope < 0.0 ? max_step : 0.0;
    } else {
      step = std::clamp(-slope / curvature, 0.0, max_step);
    }

    if (!away_step && step == 1.0) {
      // Full toward-step lands on a vertex; write it exactly.
      x.setZero();
      x[toward] = 1.0;
    } else {
      x += step * direction;
      if (away_step && step == max_step) x[away] = 0.0; // drop step leaves the face exactly
      x = x.cwiseMax(0.0);
    }
  }

  solution.weights = std::move(x);
  return solution;
}

StandardFrontier trace_standard_frontier(const AssetUniverse& universe, int lambda_count,
                                         const std::string& source_tag) {
  if (lambda_count < 2) throw DomainError("lambda count must be at least 2");

  StandardFrontier frontier;
  frontier.lambda_count = lambda_count;
  std::vector<FrontierRecord> raw;
  raw.reserve(static_cast<std::size_t>(lambda_count));

  for (int j = 0; j < lambda_count; ++j) {
    const double lambda = static_cast<double>(j) / static_cast<double>(lambda_count - 1);
    QpSolution solved = solve_qp_simplex(universe, lambda);
    frontier.diagnostics.push_back({lambda, solved.gap, solved.iterations, solved.converged});

    const RiskReturn rr = portfolio_stats(universe, solved.weights);
    FrontierRecord record;
    record.lambda = lambda;
    record.mean_return = rr.mean_return;
    record.variance = rr.variance;
    record.objective = lambda * rr.variance - (1.0 - lambda) * rr.mean_return;
    record.source = source_tag;
    for (Index i = 0; i < solved.weights.size(); ++i)
      if (solved.weights[i] > 0.0)
        record.weights.emplace_back(static_cast<int>(i) + 1, solved.weights[i]);
    raw.push_back(std::move(record));
  }

  frontier.points = pareto_filter(raw);
  return frontier;
}

} // namespace frontier
