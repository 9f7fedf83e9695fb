#pragma once

#include <utility>

#include "frontier/errors.hpp"
#include "frontier/types.hpp"

namespace frontier {

/// A set of investable assets: per-asset expected returns and the
/// covariance matrix of returns. The covariance is symmetric with a
/// nonnegative diagonal; both are checked on construction.
class AssetUniverse {
public:
  AssetUniverse(VectorXd mean_returns, MatrixXd covariance)
      : mean_returns_(std::move(mean_returns)), covariance_(std::move(covariance)) {
    const Index n = mean_returns_.size();
    if (n < 1) throw DomainError("universe needs at least one asset");
    if (covariance_.rows() != n || covariance_.cols() != n)
      throw DomainError("covariance must be n x n");
    if (covariance_ != covariance_.transpose().eval())
      throw DomainError("covariance must be symmetric");
    if ((covariance_.diagonal().array() < 0.0).any())
      throw DomainError("covariance diagonal must be nonnegative");
  }

  Index size() const { return mean_returns_.size(); }
  const VectorXd& mean_returns() const { return mean_returns_; }
  const MatrixXd& covariance() const { return covariance_; }

private:
  VectorXd mean_returns_;
  MatrixXd covariance_;
};

} // namespace frontier
