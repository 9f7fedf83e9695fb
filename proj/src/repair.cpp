#include "frontier/repair.hpp"

#include <cassert>
#include <cmath>

#include "frontier/errors.hpp"

namespace frontier {

VectorXd repair(const PortfolioConstraints& constraints, std::span<const Index> selection,
                const Eigen::Ref<const VectorXd>& raw_weights) {
  const Index k = static_cast<Index>(selection.size());
  if (k < 1) throw DomainError("repair needs a nonempty selection");
  if (raw_weights.size() != k)
    throw DomainError("raw weights must have one entry per selected asset");
  if ((raw_weights.array() < 0.0).any())
    throw DomainError("raw weights must be nonnegative");

  VectorXd lower(k), upper(k);
  for (Index s = 0; s < k; ++s) {
    lower[s] = constraints.lower[selection[static_cast<std::size_t>(s)]];
    upper[s] = constraints.upper[selection[static_cast<std::size_t>(s)]];
  }
  if (lower.sum() > 1.0 || upper.sum() < 1.0)
    throw InfeasibleError("selection bounds admit no unit-budget allocation");

  // An input that is already a feasible allocation is left untouched;
  // re-proportioning it would move it, so this is what makes repair
  // idempotent.
  if (std::abs(raw_weights.sum() - 1.0) <= 1e-9 &&
      (raw_weights.array() >= lower.array()).all() &&
      (raw_weights.array() <= upper.array()).all()) {
    return raw_weights;
  }

  // Proportional shares come from the raw weights in every pass; zero
  // total raw weight falls back to equal shares.
  VectorXd shares = raw_weights;
  if (shares.sum() <= 0.0) shares.setOnes();

  VectorXd weights = lower + shares * ((1.0 - lower.sum()) / shares.sum());
  std::vector<bool> fixed(static_cast<std::size_t>(k), false);

  for (Index pass = 0; pass < k; ++pass) {
    bool violated = false;
    for (Index s = 0; s < k; ++s) {
      if (!fixed[static_cast<std::size_t>(s)] && weights[s] > upper[s]) {
        fixed[static_cast<std::size_t>(s)] = true;
        weights[s] = upper[s];
        violated = true;
      }
    }
    if (!violated) break;

    double free_budget = 1.0;
    double free_shares = 0.0;
    Index free_count = 0;
    for (Index s = 0; s < k; ++s) {
      if (fixed[static_cast<std::size_t>(s)]) {
        free_budget -= upper[s];
      } else {
        free_budget -= lower[s];
        free_shares += shares[s];
        ++free_count;
      }
    }
    assert(free_budget >= -1e-12);
    if (free_count == 0) break;

    for (Index s = 0; s < k; ++s) {
      if (fixed[static_cast<std::size_t>(s)]) continue;
      const double share = free_shares > 0.0 ? shares[s] / free_shares : 1.0 / free_count;
      weights[s] = lower[s] + share * free_budget;
    }
  }

  return weights;
}

} // namespace frontier
