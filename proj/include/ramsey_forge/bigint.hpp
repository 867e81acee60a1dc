#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace rf {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

BigInt binomial(const BigInt& n, std::uint64_t k);
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Number of maps from a t-set onto a fixed i-set, by inclusion-exclusion.
BigInt surjections(std::uint32_t t, std::uint32_t i);

BigInt pow_big(const BigInt& base, std::uint64_t exp);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

// Parses "p/q", "p", or a finite decimal such as "0.125" into an exact rational.
Rational parse_rational(const std::string& text);

// Exact dyadic value of a finite double.
Rational rational_from_double(double v);

double to_double(const Rational& v);

}  // namespace rf
