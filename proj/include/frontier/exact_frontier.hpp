#pragma once

#include <vector>

#include "frontier/asset_universe.hpp"
#include "frontier/frontier_record.hpp"
#include "frontier/types.hpp"

namespace frontier {

struct QpSolution {
  VectorXd weights;
  double gap = 0.0; // Frank-Wolfe duality gap at termination
  int iterations = 0;
  bool converged = false;
};

/// Minimizes lambda * x'Sigma x - (1-lambda) * mu'x over the unit
/// simplex with away-step Frank-Wolfe: the linear oracle is a gradient
/// coordinate argmin (ties to the lowest index), line steps are the
/// exact closed-form quadratic minimizer, and away steps over the
/// support remove the zigzag stall near faces. Stops once the duality
/// gap g'(x - s) falls to `gap_tolerance` (a certified suboptimality
/// bound) or after `max_iterations`.
QpSolution solve_qp_simplex(const AssetUniverse& universe, double risk_aversion,
                            double gap_tolerance = 1e-10, int max_iterations = 100000);

struct SolveDiagnostics {
  double lambda = 0.0;
  double gap = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct StandardFrontier {
  std::vector<FrontierRecord> points;       // Pareto-filtered, ascending variance
  std::vector<SolveDiagnostics> diagnostics; // one per grid lambda, in grid order
  int lambda_count = 0;
};

/// Solves on the lambda grid j/(count-1), evaluates each solution, and
/// Pareto-filters duplicates and dominated grid points into the
/// reference curve.
StandardFrontier trace_standard_frontier(const AssetUniverse& universe, int lambda_count,
                                         const std::string& source_tag = "STD");

} // namespace frontier
