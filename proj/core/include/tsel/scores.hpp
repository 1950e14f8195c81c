#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace tsel {

/// Per-template scores from one scorer, with explicit orientation and the
/// min/max used when the vector has been normalized.
struct ScoreVector {
  std::vector<int> ids;
  std::vector<double> scores;
  bool higher_is_better = true;
  std::optional<std::pair<double, double>> norm_min_max;

  std::size_t size() const { return ids.size(); }
};

}  // namespace tsel
