#pragma once

#include "ramsey_forge/bigint.hpp"
#include "ramsey_forge/chain.hpp"
#include "ramsey_forge/host.hpp"
#include "ramsey_forge/interval.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rf {

/// Points t' in [ceil(t/8), t] at which the independent-set chain is checked:
/// both endpoints, the midpoint, and `interior` geometrically spaced points.
struct TPrimeGrid {
  std::size_t interior = 16;
};

std::vector<BigInt> t_prime_points(const BigInt& t, TPrimeGrid grid);

struct BoundReport {
  std::string chain_id;
  std::vector<ChainStep> steps;
  bool overall = false;
};

// Evaluates each fact used to bound the independent sets of size t' by
// (q / log^2 q)^{t'}, and the displayed inequalities themselves, at every
// grid point. Sub-threshold parameters are evaluated too; they simply fail.
BoundReport verify_chain(const MVParams& params, TPrimeGrid grid = {});

struct FinalBound {
  Interval log_inv_rho;     // -log of the two-sum rho bound
  Interval comparison_x;    // log of x = n log^2 q / (2 e q)
  std::optional<Interval> log_binomial_x;  // log C(x, t); empty when x < t - 1
  bool binomial_below = false;  // log C(x,t) <= log(1/rho), certified
};

FinalBound final_bound(const MVParams& params);

struct CycleCompleteBounds {
  Interval c5_log;  // log of t^{10/7} / (log t)^{13/7}
  Interval c7_log;  // log of t^{5/4} / (log t)^{3/2}
  std::optional<Interval> c5_binomial_log;  // log C(c5 argument, s)
  std::optional<Interval> c7_binomial_log;
};

// Requires t >= 3.
CycleCompleteBounds cycle_complete_bounds(const BigInt& t, std::optional<BigInt> s = {},
                                          LogBase base = LogBase::natural);

// Points in [lo, hi] where the two cycle-complete arguments swap order,
// located by scanning a geometric grid and bisecting each sign change.
std::vector<double> cycle_complete_crossovers(double lo, double hi,
                                              LogBase base = LogBase::natural);

// Leading term t^3 / log^2 t of the cited upper bound on r(4,t), log-domain.
Interval r4t_upper_leading_log(const BigInt& t, LogBase base = LogBase::natural);

}  // namespace rf
