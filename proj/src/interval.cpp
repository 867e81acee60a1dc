#include "ramsey_forge/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rf {

namespace {

thread_local mpfr_prec_t g_precision = kDefaultPrecision;

// Just below the minimum of lgamma on (0, inf), -0.1214862905...
constexpr double kLgammaMinBelow = -0.12148629053584961;
// lgamma decreases on (0, xmin] and increases on [xmin, inf), xmin = 1.4616...
constexpr double kLgammaArgMinLo = 1.4616321449683622;
constexpr double kLgammaArgMinHi = 1.4616321449683624;

class Scratch {
 public:
  explicit Scratch(mpfr_prec_t p) { mpfr_init2(v_, p); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }  // NOLINT

 private:
  mpfr_t v_;
};

void check_nan(const Interval& x, const char* op) {
  if (mpfr_nan_p(x.lo()) || mpfr_nan_p(x.hi()))
    throw std::domain_error(std::string("interval ") + op + " produced NaN");
}

// log(exp(x) + exp(y)) rounded in direction rnd; increasing in x and y.
void log_add_rounded(mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
  if (mpfr_inf_p(x) && mpfr_sgn(x) < 0) {
    mpfr_set(out, y, rnd);
    return;
  }
  if (mpfr_inf_p(y) && mpfr_sgn(y) < 0) {
    mpfr_set(out, x, rnd);
    return;
  }
  const mpfr_prec_t p = mpfr_get_prec(out) + 32;
  Scratch m(p), d(p);
  const bool x_big = mpfr_cmp(x, y) >= 0;
  mpfr_set(m, x_big ? x : y, rnd);
  mpfr_sub(d, x_big ? y : x, x_big ? x : y, rnd);
  mpfr_exp(d, d, rnd);
  mpfr_log1p(d, d, rnd);
  mpfr_add(out, m, d, rnd);
}

}  // namespace

mpfr_prec_t working_precision() { return g_precision; }

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(g_precision) { g_precision = bits; }
PrecisionScope::~PrecisionScope() { g_precision = saved_; }

Interval::Interval() {
  mpfr_init2(lo_, g_precision);
  mpfr_init2(hi_, g_precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v) {
  mpfr_init2(lo_, g_precision);
  mpfr_init2(hi_, g_precision);
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(double v) {
  mpfr_init2(lo_, g_precision);
  mpfr_init2(hi_, g_precision);
  mpfr_set_d(lo_, v, MPFR_RNDD);
  mpfr_set_d(hi_, v, MPFR_RNDU);
}

Interval::Interval(const BigInt& v) {
  mpfr_init2(lo_, g_precision);
  mpfr_init2(hi_, g_precision);
  mpfr_set_z(lo_, v.backend().data(), MPFR_RNDD);
  mpfr_set_z(hi_, v.backend().data(), MPFR_RNDU);
}

Interval::Interval(const Rational& v) {
  mpfr_init2(lo_, g_precision);
  mpfr_init2(hi_, g_precision);
  mpfr_set_q(lo_, v.backend().data(), MPFR_RNDD);
  mpfr_set_q(hi_, v.backend().data(), MPFR_RNDU);
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other) {}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::e() {
  Interval r;
  mpfr_set_ui(r.lo_, 1, MPFR_RNDN);
  mpfr_set_ui(r.hi_, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::ln2() {
  Interval r;
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  if (mpfr_inf_p(lo_) || mpfr_inf_p(hi_)) {
    if (mpfr_equal_p(lo_, hi_)) return mpfr_get_d(lo_, MPFR_RNDN);
    return std::nan("");
  }
  Scratch m(precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  return mpfr_get_d(m, MPFR_RNDN);
}

double Interval::width_double() const {
  Scratch w(precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w, MPFR_RNDU);
}

double Interval::relative_width() const {
  Scratch w(precision()), s(precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  if (mpfr_cmpabs(lo_, hi_) >= 0) mpfr_abs(s, lo_, MPFR_RNDD);
  else mpfr_abs(s, hi_, MPFR_RNDD);
  if (mpfr_zero_p(s.get())) return mpfr_zero_p(w.get()) ? 0.0 : INFINITY;
  mpfr_div(w, w, s, MPFR_RNDU);
  return mpfr_get_d(w, MPFR_RNDU);
}

std::string Interval::to_string(int digits) const {
  char* a = nullptr;
  char* b = nullptr;
  mpfr_asprintf(&a, "%.*RDe", digits, lo_);
  mpfr_asprintf(&b, "%.*RUe", digits, hi_);
  std::string out = std::string("[") + a + ", " + b + "]";
  mpfr_free_str(a);
  mpfr_free_str(b);
  return out;
}

bool Interval::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool Interval::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  check_nan(r, "+");
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  check_nan(r, "-");
  return r;
}

Interval operator-(const Interval& a) {
  Interval r;
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r;
  const mpfr_prec_t p = working_precision();
  Scratch t(p);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), r.lo_) < 0) mpfr_set(r.lo_, t.get(), MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), r.hi_) > 0) mpfr_set(r.hi_, t.get(), MPFR_RNDU);
      first = false;
    }
  }
  check_nan(r, "*");
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
    throw std::domain_error("interval division by an interval containing zero");
  Interval r;
  Scratch t(working_precision());
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), r.lo_) < 0) mpfr_set(r.lo_, t.get(), MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), r.hi_) > 0) mpfr_set(r.hi_, t.get(), MPFR_RNDU);
      first = false;
    }
  }
  check_nan(r, "/");
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) < 0) throw std::domain_error("log of an interval with negative part");
  Interval r;
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r;
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_) < 0) throw std::domain_error("sqrt of an interval with negative part");
  Interval r;
  mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval lgamma(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw std::domain_error("lgamma needs a positive interval");
  Interval r;
  if (mpfr_cmp_d(x.lo_, kLgammaArgMinHi) >= 0) {
    mpfr_lngamma(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_lngamma(r.hi_, x.hi_, MPFR_RNDU);
  } else if (mpfr_cmp_d(x.hi_, kLgammaArgMinLo) <= 0) {
    mpfr_lngamma(r.lo_, x.hi_, MPFR_RNDD);
    mpfr_lngamma(r.hi_, x.lo_, MPFR_RNDU);
  } else {
    Scratch t(working_precision());
    mpfr_set_d(r.lo_, kLgammaMinBelow, MPFR_RNDD);
    mpfr_lngamma(r.hi_, x.lo_, MPFR_RNDU);
    mpfr_lngamma(t, x.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  }
  return r;
}

Interval floor(const Interval& x) {
  Interval r;
  mpfr_rint_floor(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_rint_floor(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval ceil(const Interval& x) {
  Interval r;
  mpfr_rint_ceil(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_rint_ceil(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval log_add(const Interval& a, const Interval& b) {
  Interval r;
  log_add_rounded(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  log_add_rounded(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval log1m_exp(const Interval& a) {
  if (mpfr_sgn(a.hi_) >= 0) throw std::domain_error("log1m_exp needs a negative interval");
  Interval r;
  Scratch t(working_precision() + 32);
  mpfr_exp(t, a.hi_, MPFR_RNDU);
  mpfr_ui_sub(t, 1, t, MPFR_RNDD);
  mpfr_log(r.lo_, t, MPFR_RNDD);
  mpfr_exp(t, a.lo_, MPFR_RNDD);
  mpfr_ui_sub(t, 1, t, MPFR_RNDU);
  mpfr_log(r.hi_, t, MPFR_RNDU);
  return r;
}

bool certainly_le(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi(), b.lo()); }
bool certainly_lt(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi(), b.lo()); }
bool possibly_le(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.lo(), b.hi()); }

bool ceil_certain(const Interval& x, BigInt& out) {
  if (!x.is_finite()) return false;
  BigInt a, b;
  mpfr_get_z(a.backend().data(), x.lo(), MPFR_RNDU);
  mpfr_get_z(b.backend().data(), x.hi(), MPFR_RNDU);
  if (a != b) return false;
  out = std::move(a);
  return true;
}

Interval log_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log of a non-positive integer");
  return log(Interval(v));
}

namespace {

std::size_t bit_length(const BigInt& v) { return v == 0 ? 0 : msb(v) + 1; }

}  // namespace

Interval log_binomial(const BigInt& n, const BigInt& k) {
  if (k < 0 || k > n) throw std::domain_error("log_binomial needs 0 <= k <= n");
  const BigInt kk = (n - k < k) ? BigInt(n - k) : k;
  if (kk == 0) return Interval(0L);
  if (bit_length(n) <= 256 && kk <= 4096)
    return log_big(binomial(n, kk.convert_to<std::uint64_t>()));
  const auto guard = static_cast<mpfr_prec_t>(bit_length(n) + 64);
  Interval result;
  {
    PrecisionScope scope(working_precision() + guard);
    const Interval one(1L);
    result = lgamma(Interval(n) + one) - lgamma(Interval(kk) + one) -
             lgamma(Interval(BigInt(n - kk)) + one);
  }
  return result;
}

Interval log_binomial_real(const Interval& x, const BigInt& k) {
  if (k < 0) throw std::domain_error("log_binomial_real needs k >= 0");
  if (k == 0) return Interval(0L);
  const Interval kk(k);
  if (!certainly_lt(kk - Interval(1L), x))
    throw std::domain_error("log_binomial_real needs x > k - 1");
  const Interval one(1L);
  if (k <= 4096) {
    Interval acc(0L);
    const auto kmax = k.convert_to<long>();
    for (long i = 0; i < kmax; ++i) acc += log(x - Interval(i));
    return acc - lgamma(kk + one);
  }
  const long e = mpfr_get_exp(x.hi());
  const auto guard = static_cast<mpfr_prec_t>(std::max(0L, e) + 64);
  Interval result;
  {
    PrecisionScope scope(working_precision() + guard);
    Interval xx = x;
    result = lgamma(xx + one) - lgamma(kk + one) - lgamma(xx - kk + one);
  }
  return result;
}

}  // namespace rf
