#include "ramsey_forge/chain.hpp"

#include <algorithm>
#include <mpfr.h>
#include <stdexcept>

namespace rf {

ChainStep make_step(std::string description, Interval lhs_log, Interval rhs_log) {
  ChainStep s{std::move(description), std::move(lhs_log), std::move(rhs_log), false};
  s.pass = certainly_le(s.lhs_log, s.rhs_log);
  return s;
}

ChainStep make_linear_step(std::string description, const Interval& lhs, const Interval& rhs) {
  if (mpfr_sgn(lhs.lo()) <= 0 || mpfr_sgn(rhs.lo()) <= 0)
    throw std::domain_error("linear chain step needs positive sides: " + description);
  return make_step(std::move(description), log(lhs), log(rhs));
}

bool all_pass(const std::vector<ChainStep>& steps) {
  return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.pass; });
}

}  // namespace rf
