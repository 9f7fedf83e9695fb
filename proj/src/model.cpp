#include "frontier/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frontier/errors.hpp"

namespace frontier {

void PortfolioConstraints::check(Index n) const {
  if (cardinality < 1 || cardinality > n)
    throw DomainError("cardinality must lie in [1, " + std::to_string(n) + "]");
  if (lower.size() != n || upper.size() != n)
    throw DomainError("bounds must have one entry per asset");
  for (Index i = 0; i < n; ++i) {
    if (!(0.0 <= lower[i] && lower[i] <= upper[i] && upper[i] <= 1.0))
      throw DomainError("bounds must satisfy 0 <= lower <= upper <= 1 (asset " +
                        std::to_string(i + 1) + ")");
  }
}

PortfolioProblem::PortfolioProblem(AssetUniverse u, PortfolioConstraints c, double lambda)
    : universe(std::move(u)), constraints(std::move(c)), risk_aversion(lambda) {
  constraints.check(universe.size());
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw DomainError("risk aversion must lie in [0,1]");
}

double objective(const AssetUniverse& universe, double risk_aversion,
                 const Eigen::Ref<const VectorXd>& weights) {
  if (weights.size() != universe.size())
    throw DomainError("weight vector size does not match universe");
  return objective(universe.covariance(), universe.mean_returns(), risk_aversion, weights);
}

RiskReturn portfolio_stats(const AssetUniverse& universe,
                           const Eigen::Ref<const VectorXd>& weights) {
  if (weights.size() != universe.size())
    throw DomainError("weight vector size does not match universe");
  RiskReturn out;
  out.mean_return = universe.mean_returns().dot(weights);
  out.variance = weights.dot(universe.covariance() * weights);
  if (out.variance < 0.0) {
    if (out.variance <= -1e-12)
      throw DomainError("negative portfolio variance; covariance is not PSD");
    out.variance = 0.0;
  }
  return out;
}

std::vector<FrontierRecord> pareto_filter(std::span<const FrontierRecord> points) {
  // Dedupe exact (variance, return) pairs, keeping the first seen.
  std::vector<std::size_t> order;
  order.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool duplicate = false;
    for (std::size_t j : order) {
      if (points[j].variance == points[i].variance &&
          points[j].mean_return == points[i].mean_return) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) order.push_back(i);
  }

  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].variance != points[b].variance) return points[a].variance < points[b].variance;
    if (points[a].mean_return != points[b].mean_return)
      return points[a].mean_return > points[b].mean_return;
    return a < b;
  });

  std::vector<FrontierRecord> kept;
  double best_return = -std::numeric_limits<double>::infinity();
  for (std::size_t i : order) {
    if (points[i].mean_return > best_return) {
      kept.push_back(points[i]);
      best_return = points[i].mean_return;
    }
  }
  return kept;
}

std::vector<Violation> validate(const PortfolioProblem& problem, const Portfolio& portfolio) {
  std::vector<Violation> violations;
  const Index k = static_cast<Index>(portfolio.selection.size());
  if (k != problem.constraints.cardinality) {
    violations.push_back({ViolationKind::Cardinality, -1,
                          "selection has " + std::to_string(k) + " assets, expected " +
                              std::to_string(problem.constraints.cardinality)});
  }
  const double total = portfolio.weights.sum();
  if (std::abs(total - 1.0) > 1e-9) {
    violations.push_back(
        {ViolationKind::Budget, -1, "weights sum to " + std::to_string(total)});
  }
  for (Index s = 0; s < portfolio.weights.size() && s < k; ++s) {
    const Index asset = portfolio.selection[static_cast<std::size_t>(s)];
    const double w = portfolio.weights[s];
    if (w < problem.constraints.lower[asset]) {
      violations.push_back({ViolationKind::LowerBound, asset,
                            "asset " + std::to_string(asset + 1) + " below lower bound"});
    } else if (w > problem.constraints.upper[asset]) {
      violations.push_back({ViolationKind::UpperBound, asset,
                            "asset " + std::to_string(asset + 1) + " above upper bound"});
    }
  }
  return violations;
}

VectorXd dense_weights(Index n, const Portfolio& portfolio) {
  VectorXd dense = VectorXd::Zero(n);
  for (std::size_t s = 0; s < portfolio.selection.size(); ++s)
    dense[portfolio.selection[s]] = portfolio.weights[static_cast<Index>(s)];
  return dense;
}

} // namespace frontier
