#include "ramsey_forge/interval.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <mpfr.h>

using namespace rf;

TEST_SUITE("interval") {

TEST_CASE("enclosures of constants and elementary functions") {
  CHECK(oracle::near(Interval::e(), std::exp(1.0)));
  CHECK(oracle::near(Interval::ln2(), std::log(2.0)));
  CHECK(oracle::near(log(Interval(10L)), std::log(10.0)));
  CHECK(oracle::near(exp(Interval(3L)), std::exp(3.0)));
  CHECK(oracle::near(sqrt(Interval(2L)), std::sqrt(2.0)));
  CHECK(oracle::near(lgamma(Interval(10L)), std::lgamma(10.0)));
  CHECK(oracle::near(lgamma(Interval(1.25)), std::lgamma(1.25)));
  const Interval third = Interval(1L) / Interval(3L);
  CHECK(oracle::near(third, 1.0 / 3));
  CHECK(third.width_double() > 0);
  CHECK(third.relative_width() < 1e-70);
  CHECK_THROWS(Interval(1L) / (Interval(1L) - Interval(1L)));
}

TEST_CASE("comparisons are certain") {
  CHECK(certainly_lt(Interval(1L), Interval(2L)));
  CHECK(certainly_le(Interval(2L), Interval(2L)));
  const Interval a = Interval(1L) / Interval(3L) * Interval(3L);
  CHECK_FALSE(certainly_lt(a, Interval(1L)));
  CHECK(possibly_le(a, Interval(1L)));
}

TEST_CASE("log helpers") {
  CHECK(oracle::near(log_add(log(Interval(2L)), log(Interval(3L))), std::log(5.0)));
  CHECK(oracle::near(log1m_exp(log(Interval(Rational(1, 4)))), std::log(0.75)));
  const BigInt big = BigInt(1) << 300;
  CHECK(oracle::near(log_big(big), 300 * std::log(2.0)));
}

TEST_CASE("log binomial exact and asymptotic paths agree") {
  CHECK(oracle::near(log_binomial(BigInt(10), BigInt(3)), std::log(120.0)));
  // Exact path below 2^256, lgamma path above; both must enclose the truth.
  const BigInt n = (BigInt(1) << 255) + 12345;
  const Interval exact = log_binomial(n, 5000);
  const Interval viag = lgamma(Interval(BigInt(n + 1))) - lgamma(Interval(BigInt(5001))) -
                        lgamma(Interval(BigInt(n - 5000 + 1)));
  CHECK(possibly_le(exact, viag));
  CHECK(possibly_le(viag, exact));
  CHECK(exact.relative_width() < 1e-30);
  const BigInt huge = BigInt(1) << 400;
  const Interval lb = log_binomial(huge, BigInt(1) << 80);
  CHECK(lb.is_finite());
  CHECK(lb.relative_width() < 1e-20);
  CHECK(oracle::near(log_binomial_real(Interval(10L), 3), std::log(120.0)));
  CHECK(oracle::near(log_binomial_real(Interval(5.5), 1), std::log(5.5)));
}

TEST_CASE("integer ceilings") {
  BigInt c;
  CHECK(ceil_certain(Interval(Rational(7, 2)), c));
  CHECK(c == 4);
  CHECK(ceil_certain(Interval(3L), c));
  CHECK(c == 3);
}

TEST_CASE("precision scope") {
  CHECK(working_precision() == kDefaultPrecision);
  {
    PrecisionScope s(1024);
    CHECK(working_precision() == 1024);
    CHECK(Interval(1L).precision() == 1024);
  }
  CHECK(working_precision() == kDefaultPrecision);
}

}  // TEST_SUITE
