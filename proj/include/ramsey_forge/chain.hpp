#pragma once

#include "ramsey_forge/interval.hpp"

#include <string>
#include <vector>

namespace rf {

/// One inequality lhs <= rhs, both sides as natural-log enclosures. `pass`
/// means the enclosures certify it: lhs.hi <= rhs.lo.
struct ChainStep {
  std::string description;
  Interval lhs_log;
  Interval rhs_log;
  bool pass = false;

  Interval margin_log() const { return rhs_log - lhs_log; }
};

ChainStep make_step(std::string description, Interval lhs_log, Interval rhs_log);

// Compare a linear (non-log) pair; stored as logs when both are positive.
ChainStep make_linear_step(std::string description, const Interval& lhs,
                           const Interval& rhs);

bool all_pass(const std::vector<ChainStep>& steps);

}  // namespace rf
