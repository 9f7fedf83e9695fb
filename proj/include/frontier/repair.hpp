#pragma once

#include <span>

#include "frontier/model.hpp"
#include "frontier/types.hpp"

namespace frontier {

/// Greedy rescaling that turns arbitrary nonnegative raw weights over a
/// selection into a feasible allocation: every selected asset first
/// receives its lower bound plus a share of the remaining budget
/// proportional to its raw weight, then assets above their upper bound
/// are fixed there and the free budget is redistributed over the rest
/// until no bound is violated.
///
/// Requires sum(lower) <= 1 <= sum(upper) over the selection; throws
/// InfeasibleError otherwise. When all raw weights are zero, equal
/// shares are used. Output has one weight per selected asset, in
/// selection order.
VectorXd repair(const PortfolioConstraints& constraints, std::span<const Index> selection,
                const Eigen::Ref<const VectorXd>& raw_weights);

} // namespace frontier
