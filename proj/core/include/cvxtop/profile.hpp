#pragma once

#include <vector>

namespace cvxtop {

/// Parameter values indexed by a size cap t = 1..t_max.
struct GradedProfile {
  std::vector<int> values;

  int at(int t) const { return values.at(static_cast<std::size_t>(t - 1)); }
  int t_max() const { return static_cast<int>(values.size()); }
  bool operator==(const GradedProfile&) const = default;
};

}  // namespace cvxtop
