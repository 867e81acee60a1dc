#include "ramsey_forge/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace rf {

BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n < 0 || BigInt(k) > n) return 0;
  BigInt kk = k;
  if (n - kk < kk) kk = n - kk;
  const auto kmin = kk.convert_to<std::uint64_t>();
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= kmin; ++i) {
    acc *= (n - kmin + i);
    acc /= i;
  }
  return acc;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) { return binomial(BigInt(n), k); }

BigInt surjections(std::uint32_t t, std::uint32_t i) {
  if (i > t) return 0;
  if (i == 0) return t == 0 ? 1 : 0;
  BigInt sum = 0;
  for (std::uint32_t j = 0; j <= i; ++j) {
    BigInt term = binomial(i, j) * pow_big(BigInt(i - j), t);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t scale = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad rational '" + text + "'");
    return Rational(BigInt(digits), pow_big(BigInt(10), scale));
  }
  return Rational(BigInt(text));
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  int exp = 0;
  double frac = std::frexp(v, &exp);
  // frac * 2^53 is an integer.
  auto mant = static_cast<long long>(std::ldexp(frac, 53));
  exp -= 53;
  Rational r(mant);
  if (exp >= 0) r *= Rational(pow_big(BigInt(2), static_cast<std::uint64_t>(exp)));
  else r /= Rational(pow_big(BigInt(2), static_cast<std::uint64_t>(-exp)));
  return r;
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace rf
