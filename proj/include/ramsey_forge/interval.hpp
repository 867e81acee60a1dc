#pragma once

#include "ramsey_forge/bigint.hpp"

#include <mpfr.h>

#include <string>

namespace rf {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;

// Working precision (bits) for newly created intervals on this thread.
mpfr_prec_t working_precision();

class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Closed interval [lo, hi] of MPFR numbers with outward rounding: every
/// operation returns an enclosure of the exact result for all operand values.
/// A comparison that "certainly" holds is therefore rigorous.
class Interval {
 public:
  Interval();
  Interval(long v);  // NOLINT(google-explicit-constructor)
  explicit Interval(double v);
  explicit Interval(const BigInt& v);
  explicit Interval(const Rational& v);
  static Interval hull(const Interval& a, const Interval& b);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval e();
  static Interval ln2();

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  double mid_double() const;
  double width_double() const;
  // Relative width (hi - lo) / max(|lo|, |hi|); 0 for the point {0}.
  double relative_width() const;
  std::string to_string(int digits = 20) const;

  bool contains(double v) const;
  bool is_finite() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  Interval& operator+=(const Interval& b) { return *this = *this + b; }
  Interval& operator-=(const Interval& b) { return *this = *this - b; }
  Interval& operator*=(const Interval& b) { return *this = *this * b; }

  friend Interval log(const Interval& x);   // requires lo > 0
  friend Interval exp(const Interval& x);
  friend Interval sqrt(const Interval& x);  // requires lo >= 0
  friend Interval lgamma(const Interval& x);  // requires lo >= 1
  friend Interval floor(const Interval& x);
  friend Interval ceil(const Interval& x);
  friend Interval max(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);
  // log(exp(a) + exp(b))
  friend Interval log_add(const Interval& a, const Interval& b);
  // log(1 - exp(a)) for a < 0
  friend Interval log1m_exp(const Interval& a);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

bool certainly_le(const Interval& a, const Interval& b);
bool certainly_lt(const Interval& a, const Interval& b);
bool possibly_le(const Interval& a, const Interval& b);

// Exact BigInt to/from intervals. `ceil_certain` returns the integer ceiling
// when it is determined (the interval does not straddle an integer boundary).
bool ceil_certain(const Interval& x, BigInt& out);

// Natural log of a positive big integer.
Interval log_big(const BigInt& v);

// log C(n, k) for integers 0 <= k <= n. Uses the exact binomial while
// n < 2^256 and k <= 4096; otherwise lgamma at a precision grown with
// the size of n so the cancellation is absorbed.
Interval log_binomial(const BigInt& n, const BigInt& k);

// log of the generalized binomial x(x-1)...(x-k+1)/k! for real x >= k - 1.
Interval log_binomial_real(const Interval& x, const BigInt& k);

}  // namespace rf
