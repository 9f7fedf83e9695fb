#include "frontier/hopfield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "frontier/errors.hpp"
#include "frontier/rng.hpp"

namespace frontier {

double activation(double y, double lower, double upper, double gain) {
  const double scaled = gain * y;
  if (scaled > 700.0) return upper;
  if (scaled < -700.0) return lower;
  return lower + (upper - lower) / (1.0 + std::exp(-scaled));
}

double compute_alpha(double self_weight, double gain) {
  if (gain <= 0.0) throw DomainError("gain must be positive");
  if (self_weight >= 0.0) return 1.0;
  return std::min(1.0, 0.9 * 2.0 / (1.0 + gain * -self_weight));
}

HopfieldNetwork::HopfieldNetwork(const AssetUniverse& universe,
                                 const PortfolioConstraints& constraints, double risk_aversion,
                                 std::vector<Index> active,
                                 const Eigen::Ref<const VectorXd>& initial_state, double gain)
    : active_(std::move(active)), gain_(gain) {
  const Index k = static_cast<Index>(active_.size());
  if (k < 1) throw DomainError("network needs at least one active neuron");
  if (initial_state.size() != k)
    throw DomainError("initial state must have one entry per active neuron");
  if (gain_ <= 0.0) throw DomainError("gain must be positive");

  Eigen::Map<const Eigen::Matrix<Index, Eigen::Dynamic, 1>> idx(active_.data(), k);
  for (Index a : active_)
    if (a < 0 || a >= universe.size()) throw DomainError("active index out of range");

  weights_ = -2.0 * risk_aversion * universe.covariance()(idx, idx);
  biases_ = (1.0 - risk_aversion) * universe.mean_returns()(idx);
  lower_ = constraints.lower(idx);
  upper_ = constraints.upper(idx);
  state_ = initial_state;
  for (Index i = 0; i < k; ++i)
    if (state_[i] < lower_[i] || state_[i] > upper_[i])
      throw DomainError("initial state outside per-asset bounds");

  relaxation_.resize(k);
  for (Index i = 0; i < k; ++i) relaxation_[i] = compute_alpha(weights_(i, i), gain_);
}

void HopfieldNetwork::set_gain(double gain) {
  if (gain <= 0.0) throw DomainError("gain must be positive");
  gain_ = gain;
  for (Index i = 0; i < size(); ++i) relaxation_[i] = compute_alpha(weights_(i, i), gain_);
}

double HopfieldNetwork::step_async(Index i) {
  const double field = weights_.col(i).dot(state_) + biases_[i];
  const double target = activation(field, lower_[i], upper_[i], gain_);
  state_[i] = (1.0 - relaxation_[i]) * state_[i] + relaxation_[i] * target;
  return state_[i];
}

RelaxResult HopfieldNetwork::relax(std::mt19937_64& rng, double tolerance, int max_sweeps) {
  RelaxResult result;
  std::vector<Index> order(static_cast<std::size_t>(size()));
  std::iota(order.begin(), order.end(), Index{0});
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    shuffle(order, rng);
    double max_delta = 0.0;
    for (Index i : order) {
      const double before = state_[i];
      max_delta = std::max(max_delta, std::abs(step_async(i) - before));
    }
    result.sweeps = sweep + 1;
    result.last_delta = max_delta;
    // A quiet sweep only counts as converged if the frozen state is a
    // fixed point too; sequential updates can hide a residual.
    if (max_delta <= tolerance && fixed_point_residual() <= tolerance) {
      result.converged = true;
      break;
    }
  }
  return result;
}

double HopfieldNetwork::fixed_point_residual() const {
  double residual = 0.0;
  for (Index i = 0; i < size(); ++i) {
    const double field = weights_.col(i).dot(state_) + biases_[i];
    const double target = activation(field, lower_[i], upper_[i], gain_);
    residual = std::max(residual, relaxation_[i] * std::abs(target - state_[i]));
  }
  return residual;
}

double HopfieldNetwork::energy() const { return energy(state_); }

double HopfieldNetwork::energy(const Eigen::Ref<const VectorXd>& state) const {
  if (state.size() != size()) throw DomainError("state size does not match network");
  return -0.5 * state.dot(weights_ * state) - biases_.dot(state);
}

void HopfieldNetwork::prune_worst() {
  const Index k = size();
  if (k < 2) throw DomainError("cannot prune a network below one neuron");

  Index worst = 0;
  for (Index i = 1; i < k; ++i) {
    if (state_[i] < state_[worst] ||
        (state_[i] == state_[worst] && active_[static_cast<std::size_t>(i)] <
                                           active_[static_cast<std::size_t>(worst)]))
      worst = i;
  }

  std::vector<Index> keep;
  keep.reserve(static_cast<std::size_t>(k - 1));
  for (Index i = 0; i < k; ++i)
    if (i != worst) keep.push_back(i);
  Eigen::Map<const Eigen::Matrix<Index, Eigen::Dynamic, 1>> keep_idx(keep.data(), k - 1);

  weights_ = weights_(keep_idx, keep_idx).eval();
  biases_ = biases_(keep_idx).eval();
  lower_ = lower_(keep_idx).eval();
  upper_ = upper_(keep_idx).eval();
  relaxation_ = relaxation_(keep_idx).eval();
  state_ = state_(keep_idx).eval();
  active_.erase(active_.begin() + worst);
}

} // namespace frontier
