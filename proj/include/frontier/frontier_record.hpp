#pragma once

#include <string>
#include <utility>
#include <vector>

namespace frontier {

/// One point on an efficient frontier. Weights are sparse
/// (asset id, proportion) pairs; asset ids are 1-based as in the
/// input data files. `source` tags the producer ("NN", "GA", ...).
struct FrontierRecord {
  double lambda = 0.0;
  double mean_return = 0.0;
  double variance = 0.0;
  double objective = 0.0;
  std::string source;
  std::vector<std::pair<int, double>> weights;
};

} // namespace frontier
