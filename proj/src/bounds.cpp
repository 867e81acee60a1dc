#include "ramsey_forge/bounds.hpp"

#include "ramsey_forge/coloring.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rf {

namespace {

std::string str(const BigInt& v) { return to_string(v); }

// Log enclosures for an exactly decided integer comparison.
ChainStep exact_step(std::string description, const BigInt& lhs, const BigInt& rhs,
                     Interval lhs_log, Interval rhs_log) {
  ChainStep s{std::move(description), std::move(lhs_log), std::move(rhs_log), lhs <= rhs};
  return s;
}

ChainStep failed_step(std::string description) {
  return ChainStep{std::move(description) + " (not evaluable)", Interval(0L), Interval(0L), false};
}

std::vector<ChainStep> steps_at(const MVParams& p, const BigInt& tp) {
  const bool r4t = p.variant == Variant::r4t;
  const std::string at = " at t'=" + str(tp);
  const Interval ln_q = log_big(p.q);
  const Interval ln_n = log_big(p.n);
  const Interval ln_R = log_big(p.R);
  const Interval ln_tp = log_big(tp);
  const Interval L = log_in_base(p.q, p.log_base);
  const Interval ln_beta = ln_q - Interval(2L) * log(L);  // log(q / log^2 q)
  const Interval r_iv(p.r);
  const Interval tp_iv(tp);
  // log of q^4 (r4t) or 2q^3 (r3t): the per-r factor bounding n.
  const Interval ln_base = r4t ? Interval(4L) * ln_q : Interval::ln2() + Interval(3L) * ln_q;

  std::vector<ChainStep> out;
  out.push_back(exact_step("r <= t'" + at, p.r, tp, log_big(p.r), ln_tp));
  out.push_back(exact_step("t' <= R/2" + at, BigInt(2 * tp), p.R, ln_tp, ln_R - Interval::ln2()));
  {
    // q = 2^k, so q^{4r} = 2^{4rk} and (2q^3)^r = 2^{r(1+3k)}.
    const BigInt k = p.q_exponent;
    const BigInt exponent = r4t ? BigInt(4 * p.r * k) : BigInt(p.r * (1 + 3 * k));
    out.push_back(exact_step(std::string(r4t ? "q^{4r}" : "(2q^3)^r") + " <= 2^{t'}" + at,
                             exponent, tp, r_iv * ln_base, tp_iv * Interval::ln2()));
  }
  out.push_back(make_step("2eR/t' <= q/log^2 q" + at,
                          Interval::ln2() + Interval(1L) + ln_R - ln_tp, ln_beta));

  if (p.r > tp || tp > p.R) {
    out.push_back(failed_step("C(n,r)C(R,t'-r) <= n^r C(R,t')" + at));
    out.push_back(failed_step("n^r C(R,t') <= base^r (eR/t')^{t'}" + at));
    out.push_back(failed_step("base^r (eR/t')^{t'} <= (q/log^2 q)^{t'}" + at));
    out.push_back(failed_step("C(n,r)C(R,t'-r) <= (q/log^2 q)^{t'}" + at));
    return out;
  }
  const Interval a_lhs = log_binomial(p.n, p.r) + log_binomial(p.R, BigInt(tp - p.r));
  const Interval a_rhs = r_iv * ln_n + log_binomial(p.R, tp);
  const Interval b_rhs = r_iv * ln_base + tp_iv * (Interval(1L) + ln_R - ln_tp);
  const Interval c_rhs = tp_iv * ln_beta;
  out.push_back(make_step("C(n,r)C(R,t'-r) <= n^r C(R,t')" + at, a_lhs, a_rhs));
  out.push_back(make_step(std::string("n^r C(R,t') <= ") + (r4t ? "q^{4r}" : "(2q^3)^r") +
                              " (eR/t')^{t'}" + at,
                          a_rhs, b_rhs));
  out.push_back(make_step(std::string(r4t ? "q^{4r}" : "(2q^3)^r") +
                              " (eR/t')^{t'} <= (q/log^2 q)^{t'}" + at,
                          b_rhs, c_rhs));
  out.push_back(make_step("C(n,r)C(R,t'-r) <= (q/log^2 q)^{t'}" + at, a_lhs, c_rhs));
  return out;
}

}  // namespace

std::vector<BigInt> t_prime_points(const BigInt& t, TPrimeGrid grid) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  const BigInt lo = (t + 7) / 8;
  const BigInt hi = t;
  std::vector<BigInt> pts{lo, hi, BigInt((lo + hi) / 2)};
  const double ratio = to_double(Rational(hi, lo));
  constexpr double kScale = 4503599627370496.0;  // 2^52
  for (std::size_t j = 1; j <= grid.interior; ++j) {
    const double f = std::pow(ratio, static_cast<double>(j) / static_cast<double>(grid.interior + 1));
    BigInt pt = lo * BigInt(static_cast<std::uint64_t>(f * kScale)) / BigInt(std::uint64_t{1} << 52);
    pts.push_back(std::clamp(pt, lo, hi));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

BoundReport verify_chain(const MVParams& params, TPrimeGrid grid) {
  BoundReport rep;
  const bool r4t = params.variant == Variant::r4t;
  rep.chain_id = r4t ? "r4t-independent-sets" : "r3t-independent-sets";
  {
    const BigInt bound = r4t ? BigInt(pow_big(params.q, 4)) : BigInt(2 * pow_big(params.q, 3));
    rep.steps.push_back(exact_step(r4t ? "n <= q^4" : "n <= 2q^3", params.n, bound,
                                   log_big(params.n), log_big(bound)));
  }
  const auto pts = t_prime_points(params.t, grid);
  std::vector<std::vector<ChainStep>> per(pts.size());
  const mpfr_prec_t prec = working_precision();
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < pts.size(); ++i) {
    PrecisionScope scope(prec);
    per[i] = steps_at(params, pts[i]);
  }
  for (auto& s : per) std::move(s.begin(), s.end(), std::back_inserter(rep.steps));
  rep.overall = all_pass(rep.steps);
  return rep;
}

FinalBound final_bound(const MVParams& params) {
  FinalBound fb;
  const auto rho = rho_analytic_bound(params);
  fb.log_inv_rho = -rho.log_two_sum;
  const Interval L = log_in_base(params.q, params.log_base);
  const Interval x = Interval(params.n) * L * L / (Interval(2L) * Interval::e() * Interval(params.q));
  fb.comparison_x = log(x);
  // Below the construction range x can fall under t - 1, where the
  // generalized binomial changes sign; no claim is made there.
  if (!certainly_le(Interval(BigInt(params.t - 1)), x)) return fb;
  fb.log_binomial_x = log_binomial_real(x, params.t);
  fb.binomial_below = certainly_le(*fb.log_binomial_x, fb.log_inv_rho);
  return fb;
}

CycleCompleteBounds cycle_complete_bounds(const BigInt& t, std::optional<BigInt> s, LogBase base) {
  if (t < 3) throw std::invalid_argument("cycle-complete bounds need t >= 3");
  CycleCompleteBounds out;
  const Interval ln_t = log_big(t);
  const Interval ln_L = log(log_in_base(t, base));
  out.c5_log = Interval(Rational(10, 7)) * ln_t - Interval(Rational(13, 7)) * ln_L;
  out.c7_log = Interval(Rational(5, 4)) * ln_t - Interval(Rational(3, 2)) * ln_L;
  if (s) {
    if (*s < 1) throw std::invalid_argument("s must be positive");
    out.c5_binomial_log = log_binomial_real(exp(out.c5_log), *s);
    out.c7_binomial_log = log_binomial_real(exp(out.c7_log), *s);
  }
  return out;
}

std::vector<double> cycle_complete_crossovers(double lo, double hi, LogBase base) {
  if (!(lo >= 3) || !(hi > lo)) throw std::invalid_argument("crossover range must satisfy 3 <= lo < hi");
  // Difference of the two log-arguments as a function of u = ln t.
  auto diff = [&](double u) {
    const Interval lt(u);
    const Interval lL = log(base == LogBase::natural ? lt : lt / Interval::ln2());
    const Interval d = Interval(Rational(10, 7)) * lt - Interval(Rational(13, 7)) * lL -
                       Interval(Rational(5, 4)) * lt + Interval(Rational(3, 2)) * lL;
    return d.mid_double();
  };
  constexpr int kSteps = 2000;
  const double ulo = std::log(lo), uhi = std::log(hi);
  std::vector<double> out;
  double prev_u = ulo, prev = diff(ulo);
  for (int i = 1; i <= kSteps; ++i) {
    const double u = ulo + (uhi - ulo) * i / kSteps;
    const double cur = diff(u);
    if ((prev < 0) != (cur < 0)) {
      double a = prev_u, b = u;
      const bool neg_at_a = prev < 0;
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, b); ++it) {
        const double m = 0.5 * (a + b);
        if ((diff(m) < 0) == neg_at_a) a = m;
        else b = m;
      }
      out.push_back(std::exp(0.5 * (a + b)));
    }
    prev_u = u;
    prev = cur;
  }
  return out;
}

Interval r4t_upper_leading_log(const BigInt& t, LogBase base) {
  if (t < 3) throw std::invalid_argument("leading term needs t >= 3");
  return Interval(3L) * log_big(t) - Interval(2L) * log(log_in_base(t, base));
}

}  // namespace rf
