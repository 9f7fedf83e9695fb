#pragma once

#include <random>
#include <vector>

#include "frontier/asset_universe.hpp"
#include "frontier/frontier_record.hpp"
#include "frontier/model.hpp"
#include "frontier/rng.hpp"

namespace frontier::test {

/// Three assets, mu = (0.1, 0.2, 0.3), covariance diag(0.1).
inline AssetUniverse u3() {
  VectorXd mu(3);
  mu << 0.1, 0.2, 0.3;
  MatrixXd sigma = MatrixXd::Identity(3, 3) * 0.1;
  return AssetUniverse(mu, sigma);
}

/// Random universe with a full-rank PSD covariance (factor load plus
/// diagonal noise) and returns scaled like the diagonal examples.
inline AssetUniverse random_universe(Index n, std::mt19937_64& rng, double scale = 0.1) {
  VectorXd mu(n);
  for (Index i = 0; i < n; ++i) mu[i] = 0.3 * uniform01(rng);
  MatrixXd load(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) load(i, j) = 2.0 * uniform01(rng) - 1.0;
  MatrixXd sigma = scale * (load * load.transpose()) / static_cast<double>(n);
  for (Index i = 0; i < n; ++i) sigma(i, i) += scale * (0.1 + uniform01(rng));
  sigma = ((sigma + sigma.transpose()) / 2.0).eval();
  return AssetUniverse(mu, sigma);
}

/// Six assets with weekly-scale returns and a one-factor covariance;
/// the brute-force playground for the K=2 heuristic oracle.
inline AssetUniverse u6() {
  VectorXd mu(6);
  mu << 0.0042, 0.0070, 0.0029, 0.0055, 0.0071, 0.0048;
  VectorXd sd(6), loading(6);
  sd << 0.031, 0.044, 0.027, 0.039, 0.052, 0.035;
  loading << 0.72, 0.85, 0.61, 0.78, 0.91, 0.66;
  MatrixXd sigma(6, 6);
  for (Index i = 0; i < 6; ++i) {
    for (Index j = i; j < 6; ++j) {
      sigma(i, j) = i == j ? sd[i] * sd[i] : loading[i] * loading[j] * sd[i] * sd[j];
      sigma(j, i) = sigma(i, j);
    }
  }
  return AssetUniverse(mu, sigma);
}

inline FrontierRecord record(double variance, double mean_return, std::string source = "T") {
  FrontierRecord r;
  r.variance = variance;
  r.mean_return = mean_return;
  r.source = std::move(source);
  return r;
}

inline std::vector<FrontierRecord> random_records(int count, std::mt19937_64& rng) {
  std::vector<FrontierRecord> records;
  records.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    FrontierRecord r;
    r.lambda = uniform01(rng);
    r.variance = uniform01(rng);
    r.mean_return = uniform01(rng);
    r.objective = r.lambda * r.variance - (1.0 - r.lambda) * r.mean_return;
    r.source = (i % 2 == 0) ? "NN" : "GA";
    const int pairs = 1 + static_cast<int>(uniform_below(rng, 4));
    for (int p = 0; p < pairs; ++p)
      r.weights.emplace_back(static_cast<int>(uniform_below(rng, 50)) * 4 + p + 1,
                             uniform01(rng) + 1e-3);
    records.push_back(std::move(r));
  }
  return records;
}

/// O(n^2) dominance filter used as the oracle for pareto_filter.
inline std::vector<FrontierRecord> brute_force_pareto(const std::vector<FrontierRecord>& points) {
  std::vector<FrontierRecord> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < points.size() && !drop; ++j)
      if (j != i && dominates(points[j], points[i])) drop = true;
    for (std::size_t j = 0; j < i && !drop; ++j)
      if (points[j].variance == points[i].variance &&
          points[j].mean_return == points[i].mean_return)
        drop = true; // duplicate of an earlier point
    if (!drop) kept.push_back(points[i]);
  }
  return kept;
}

} // namespace frontier::test
