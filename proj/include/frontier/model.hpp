#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frontier/asset_universe.hpp"
#include "frontier/frontier_record.hpp"
#include "frontier/types.hpp"

namespace frontier {

/// Cardinality and per-asset investment bounds: exactly `cardinality`
/// assets carry weight, and a selected asset i invests within
/// [lower[i], upper[i]].
struct PortfolioConstraints {
  Index cardinality = 1;
  VectorXd lower;
  VectorXd upper;

  void check(Index n) const;
};

struct PortfolioProblem {
  AssetUniverse universe;
  PortfolioConstraints constraints;
  double risk_aversion = 0.0; // lambda in [0,1]

  PortfolioProblem(AssetUniverse u, PortfolioConstraints c, double lambda);
};

struct PortfolioStats {
  double mean_return = 0.0;
  double variance = 0.0;
  double objective = 0.0;
};

/// A candidate portfolio: the selected asset indices (0-based) and one
/// weight per selected asset, in the same order.
struct Portfolio {
  std::vector<Index> selection;
  VectorXd weights;
  std::optional<PortfolioStats> stats;
};

/// Scalarized mean-variance objective
///   lambda * x' Sigma x - (1 - lambda) * mu' x
/// over a full-length weight vector (zeros allowed).
template <typename DerivedM, typename DerivedV, typename DerivedX>
double objective(const Eigen::MatrixBase<DerivedM>& covariance,
                 const Eigen::MatrixBase<DerivedV>& mean_returns, double risk_aversion,
                 const Eigen::MatrixBase<DerivedX>& weights) {
  return risk_aversion * double(weights.dot(covariance * weights)) -
         (1.0 - risk_aversion) * double(mean_returns.dot(weights));
}

double objective(const AssetUniverse& universe, double risk_aversion,
                 const Eigen::Ref<const VectorXd>& weights);

struct RiskReturn {
  double mean_return = 0.0;
  double variance = 0.0;
};

/// (mu' x, x' Sigma x). Variances in (-1e-12, 0) are rounded up to 0;
/// anything more negative signals a non-PSD covariance and throws.
RiskReturn portfolio_stats(const AssetUniverse& universe,
                           const Eigen::Ref<const VectorXd>& weights);

/// Strict Pareto dominance on (variance, mean return): no worse in
/// both, strictly better in at least one.
inline bool dominates(double variance_a, double return_a, double variance_b, double return_b) {
  return variance_a <= variance_b && return_a >= return_b &&
         (variance_a < variance_b || return_a > return_b);
}

inline bool dominates(const FrontierRecord& a, const FrontierRecord& b) {
  return dominates(a.variance, a.mean_return, b.variance, b.mean_return);
}

/// Keeps the nondominated points, sorted by ascending variance. Exact
/// (variance, return) duplicates collapse to the first one encountered.
std::vector<FrontierRecord> pareto_filter(std::span<const FrontierRecord> points);

enum class ViolationKind { Budget, Cardinality, LowerBound, UpperBound };

struct Violation {
  ViolationKind kind;
  Index asset = -1; // 0-based, set for bound violations
  std::string message;
};

/// Empty iff the portfolio is feasible for the problem: |selection| =
/// K, weights sum to 1 within 1e-9, and each selected weight lies in
/// its bounds.
std::vector<Violation> validate(const PortfolioProblem& problem, const Portfolio& portfolio);

/// Scatter selected weights into a dense length-n vector.
VectorXd dense_weights(Index n, const Portfolio& portfolio);

} // namespace frontier
