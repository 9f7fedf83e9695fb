#include <doctest.h>

#include <cmath>

#include "frontier/errors.hpp"
#include "frontier/hopfield.hpp"
#include "support.hpp"

using namespace frontier;

namespace {

PortfolioConstraints default_bounds(Index n, double eps = 0.01) {
  PortfolioConstraints c;
  c.cardinality = 1;
  c.lower = VectorXd::Constant(n, eps);
  c.upper = VectorXd::Ones(n);
  return c;
}

AssetUniverse correlated_u3() {
  VectorXd mu(3);
  mu << 0.1, 0.2, 0.3;
  MatrixXd sigma(3, 3);
  sigma << 0.1, 0.04, 0.0, 0.04, 0.1, 0.0, 0.0, 0.0, 0.1;
  return AssetUniverse(mu, sigma);
}

HopfieldNetwork full_network(const AssetUniverse& u, double lambda, double gain,
                             double eps = 0.01) {
  const Index n = u.size();
  std::vector<Index> active(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;
  const PortfolioConstraints c = default_bounds(n, eps);
  const VectorXd start = VectorXd::Constant(n, 0.5);
  return HopfieldNetwork(u, c, lambda, active, start, gain);
}

} // namespace

TEST_CASE("activation is a bounded sigmoid") {
  CHECK(activation(0.0, 0.01, 1.0, 9.0) == doctest::Approx(0.505).epsilon(1e-12));
  CHECK(activation(1e6, 0.01, 1.0, 2.0) == 1.0);
  CHECK(activation(-1e6, 0.01, 1.0, 2.0) == 0.01);
  CHECK(activation(1.0, 0.01, 1.0, 2.0) == doctest::Approx(0.8819891071981035).epsilon(1e-12));
  // monotone in the input
  double prev = -1.0;
  for (double y = -3.0; y <= 3.0; y += 0.25) {
    const double value = activation(y, 0.01, 1.0, 5.0);
    CHECK(value > prev);
    prev = value;
  }
}

TEST_CASE("compute_alpha satisfies the fixed-point bound") {
  CHECK(compute_alpha(0.0, 50.0) == 1.0);
  CHECK(compute_alpha(-0.1, 10.0) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(compute_alpha(-0.1, 100.0) == doctest::Approx(0.16363636363636364).epsilon(1e-12));
  CHECK_THROWS_AS(compute_alpha(-0.1, 0.0), DomainError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const double w = -3.0 * uniform01(rng);
    const double beta = 0.1 + 200.0 * uniform01(rng);
    const double alpha = compute_alpha(w, beta);
    CHECK(alpha > 0.0);
    CHECK(alpha <= 1.0);
    CHECK(w > -(2.0 - alpha) / (alpha * beta)); // the stability condition, strictly
  }
}

TEST_CASE("build_network maps problem data onto weights and biases") {
  const AssetUniverse u = correlated_u3();
  HopfieldNetwork net = full_network(u, 0.5, 10.0);
  CHECK(net.weights()(0, 1) == doctest::Approx(-0.04).epsilon(1e-12));
  CHECK(net.biases()[0] == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(net.weights() == net.weights().transpose().eval());

  HopfieldNetwork pure_return = full_network(u, 0.0, 10.0);
  CHECK(pure_return.weights().isZero(0.0));
  CHECK(pure_return.biases() == u.mean_returns());

  HopfieldNetwork pure_risk = full_network(u, 1.0, 10.0);
  CHECK(pure_risk.biases().isZero(0.0));
}

TEST_CASE("build_network rejects bad inputs") {
  const AssetUniverse u = correlated_u3();
  const PortfolioConstraints c = default_bounds(3);
  CHECK_THROWS_AS(HopfieldNetwork(u, c, 0.5, {}, VectorXd(0), 10.0), DomainError);
  CHECK_THROWS_AS(HopfieldNetwork(u, c, 0.5, {0}, VectorXd::Zero(1), 10.0),
                  DomainError); // state below the lower bound
}

TEST_CASE("step_async applies the damped sigmoid update") {
  // Isolated neuron with zero field: target is the sigmoid midpoint.
  VectorXd mu = VectorXd::Zero(1);
  MatrixXd sigma = MatrixXd::Zero(1, 1);
  const AssetUniverse u(mu, sigma);
  HopfieldNetwork net(u, default_bounds(1), 0.0, {0}, VectorXd::Constant(1, 0.1), 7.0);
  CHECK(net.relaxation()[0] == 1.0);
  CHECK(net.step_async(0) == doctest::Approx(0.505).epsilon(1e-12));
  // Already at the fixed point: no further movement.
  CHECK(net.step_async(0) == doctest::Approx(0.505).epsilon(1e-12));
}

TEST_CASE("step_async blends old and new state through the relaxation rate") {
  // lambda=1, sigma_11=0.1, gain 13 gives w=-0.2 and alpha exactly 0.5.
  VectorXd mu(1);
  mu << 0.2;
  MatrixXd sigma(1, 1);
  sigma << 0.1;
  const AssetUniverse u(mu, sigma);
  HopfieldNetwork net(u, default_bounds(1), 1.0, {0}, VectorXd::Constant(1, 0.1), 13.0);
  REQUIRE(net.relaxation()[0] == doctest::Approx(0.5).epsilon(1e-12));
  const double field = net.weights()(0, 0) * 0.1;
  const double expected = 0.5 * 0.1 + 0.5 * activation(field, 0.01, 1.0, 13.0);
  CHECK(net.step_async(0) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(net.state()[0] == doctest::Approx(0.27050503555750055).epsilon(1e-9));
}

TEST_CASE("relax decouples under zero weights and converges in one pass") {
  const AssetUniverse u = test::u3();
  HopfieldNetwork net = full_network(u, 0.0, 10.0);
  std::mt19937_64 rng(3);
  const RelaxResult result = net.relax(rng);
  CHECK(result.converged);
  CHECK(result.sweeps <= 2);
  CHECK(net.state()[0] == doctest::Approx(0.7337479928437048).epsilon(1e-12));
  CHECK(net.state()[1] == doctest::Approx(0.8819891071981035).epsilon(1e-12));
  CHECK(net.state()[2] == doctest::Approx(0.953048385554209).epsilon(1e-12));
}

TEST_CASE("relax at a fixed point reports convergence immediately") {
  VectorXd mu = VectorXd::Zero(1);
  MatrixXd sigma = MatrixXd::Zero(1, 1);
  const AssetUniverse u(mu, sigma);
  const double fixed_point = activation(0.0, 0.01, 1.0, 7.0);
  HopfieldNetwork net(u, default_bounds(1), 0.0, {0}, VectorXd::Constant(1, fixed_point), 7.0);
  std::mt19937_64 rng(4);
  const RelaxResult result = net.relax(rng);
  CHECK(result.converged);
  CHECK(result.sweeps == 1);
  CHECK(net.state()[0] == fixed_point); // bit-identical: the update is a no-op here
}

TEST_CASE("relax reaches a small fixed-point residual on coupled networks") {
  const AssetUniverse u = correlated_u3();
  HopfieldNetwork net = full_network(u, 1.0, 10.0);
  std::mt19937_64 rng(9);
  const RelaxResult result = net.relax(rng);
  CHECK(result.converged);
  CHECK(net.fixed_point_residual() <= 1e-6);
}

TEST_CASE("energy matches the portfolio objective on full networks") {
  VectorXd mu = VectorXd::Zero(2);
  MatrixXd sigma = MatrixXd::Zero(2, 2);
  HopfieldNetwork zero_net(AssetUniverse(mu, sigma), default_bounds(2), 0.0, {0, 1},
                           VectorXd::Constant(2, 0.4), 5.0);
  CHECK(zero_net.energy() == 0.0);

  const AssetUniverse u3 = test::u3();
  HopfieldNetwork net = full_network(u3, 1.0, 10.0);
  const VectorXd thirds = VectorXd::Constant(3, 1.0 / 3);
  CHECK(net.energy(thirds) == doctest::Approx(1.0 / 30).epsilon(1e-12));
  CHECK(net.energy(thirds) == doctest::Approx(objective(u3, 1.0, thirds)).epsilon(1e-12));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + static_cast<Index>(uniform_below(rng, 6));
    const AssetUniverse u = test::random_universe(n, rng);
    const double lambda = uniform01(rng);
    VectorXd state(n);
    for (Index i = 0; i < n; ++i) state[i] = 0.01 + 0.99 * uniform01(rng);
    std::vector<Index> active(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;
    HopfieldNetwork random_net(u, default_bounds(n), lambda, active, state, 10.0);
    CHECK(std::abs(random_net.energy(state) - objective(u, lambda, state)) <= 1e-12);
  }
}

TEST_CASE("prune_worst removes the smallest output and shrinks consistently") {
  const AssetUniverse u = correlated_u3();
  const PortfolioConstraints c = default_bounds(3);
  VectorXd state(3);
  state << 0.5, 0.02, 0.3;
  HopfieldNetwork net(u, c, 0.5, {0, 1, 2}, state, 10.0);
  const MatrixXd before = net.weights();
  net.prune_worst();
  CHECK(net.active() == std::vector<Index>{0, 2});
  CHECK(net.size() == 2);
  CHECK(net.weights()(0, 0) == before(0, 0));
  CHECK(net.weights()(0, 1) == before(0, 2));
  CHECK(net.weights()(1, 1) == before(2, 2));
  CHECK(net.weights() == net.weights().transpose().eval());
  CHECK(net.state()[0] == 0.5);
  CHECK(net.state()[1] == 0.3);
  CHECK(net.relaxation()[0] == compute_alpha(net.weights()(0, 0), net.gain()));

  // ties break toward the lowest asset index
  state << 0.5, 0.02, 0.02;
  HopfieldNetwork tied(u, c, 0.5, {0, 1, 2}, state, 10.0);
  tied.prune_worst();
  CHECK(tied.active() == std::vector<Index>{0, 2});

  HopfieldNetwork tiny(u, c, 0.5, {1}, VectorXd::Constant(1, 0.5), 10.0);
  CHECK_THROWS_AS(tiny.prune_worst(), DomainError);
}

TEST_CASE("step_async keeps every state inside its bounds") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 2 + static_cast<Index>(uniform_below(rng, 6));
    const AssetUniverse u = test::random_universe(n, rng);
    PortfolioConstraints c;
    c.cardinality = 1;
    c.lower = VectorXd(n);
    c.upper = VectorXd(n);
    VectorXd state(n);
    for (Index i = 0; i < n; ++i) {
      c.lower[i] = 0.2 * uniform01(rng);
      c.upper[i] = c.lower[i] + 0.1 + 0.7 * uniform01(rng);
      state[i] = c.lower[i] + (c.upper[i] - c.lower[i]) * uniform01(rng);
    }
    std::vector<Index> active(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;
    HopfieldNetwork net(u, c, uniform01(rng), active, state, 1.0 + 60.0 * uniform01(rng));
    for (int step = 0; step < 40; ++step) {
      const Index i = static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(n)));
      const double value = net.step_async(i);
      CHECK(value >= c.lower[i]);
      CHECK(value <= c.upper[i]);
    }
  }
}

TEST_CASE("relax is deterministic for a fixed seed") {
  const AssetUniverse u = correlated_u3();
  HopfieldNetwork a = full_network(u, 0.7, 25.0);
  HopfieldNetwork b = full_network(u, 0.7, 25.0);
  std::mt19937_64 rng_a(99), rng_b(99);
  a.relax(rng_a);
  b.relax(rng_b);
  CHECK(a.state() == b.state());
}
