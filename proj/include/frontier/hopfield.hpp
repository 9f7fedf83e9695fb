#pragma once

#include <random>
#include <span>
#include <vector>

#include "frontier/model.hpp"
#include "frontier/types.hpp"

namespace frontier {

/// Bounded sigmoid mapping a net input into [lower, upper]:
///   lower + (upper - lower) / (1 + exp(-gain * y)).
/// Monotone in y; saturates cleanly instead of overflowing.
double activation(double y, double lower, double upper, double gain);

/// Largest safe per-neuron relaxation rate for the cycle-free discrete
/// dynamics. Self-weights >= 0 admit the full rate 1; negative
/// self-weights need rate < 2 / (1 + gain * |w_ii|), applied with a 0.9
/// safety factor so the fixed-point condition holds strictly.
double compute_alpha(double self_weight, double gain);

struct RelaxResult {
  bool converged = false;
  int sweeps = 0;
  double last_delta = 0.0;
};

/// A recurrent network over a subset of assets whose energy equals the
/// scalarized portfolio objective on that subset. Connection weights
/// are -2 * lambda * covariance, biases (1 - lambda) * mean returns;
/// each neuron's output is confined to that asset's investment bounds
/// by its sigmoid.
class HopfieldNetwork {
public:
  HopfieldNetwork(const AssetUniverse& universe, const PortfolioConstraints& constraints,
                  double risk_aversion, std::vector<Index> active,
                  const Eigen::Ref<const VectorXd>& initial_state, double gain);

  Index size() const { return static_cast<Index>(active_.size()); }
  const std::vector<Index>& active() const { return active_; }
  const MatrixXd& weights() const { return weights_; }
  const VectorXd& biases() const { return biases_; }
  const VectorXd& lower() const { return lower_; }
  const VectorXd& upper() const { return upper_; }
  const VectorXd& relaxation() const { return relaxation_; }
  const VectorXd& state() const { return state_; }

  double gain() const { return gain_; }
  void set_gain(double gain); // recomputes the relaxation rates

  /// One asynchronous update of neuron `i` (position in the active
  /// set); returns the new state value.
  double step_async(Index i);

  /// Full sweeps in fresh random orders until the largest state change
  /// in a sweep drops to `tolerance`, or `max_sweeps` is hit.
  RelaxResult relax(std::mt19937_64& rng, double tolerance = 1e-6, int max_sweeps = 100);

  /// -1/2 x'Wx - b'x for the current (or a given) state.
  double energy() const;
  double energy(const Eigen::Ref<const VectorXd>& state) const;

  /// max_i alpha_i * |activation(field_i) - x_i| at the current state.
  double fixed_point_residual() const;

  /// Removes the neuron with the smallest output (ties: lowest asset
  /// index). Weights, biases, bounds, rates, and state shrink together.
  void prune_worst();

private:
  std::vector<Index> active_;
  MatrixXd weights_;
  VectorXd biases_;
  VectorXd lower_;
  VectorXd upper_;
  VectorXd relaxation_;
  VectorXd state_;
  double gain_;
};

} // namespace frontier
