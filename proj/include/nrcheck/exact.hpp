#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nrcheck {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Decimal form for integers, "p/q" (or just "p" when q == 1) for rationals.
inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integral(const Rational& v) {
  return boost::multiprecision::denominator(v) == 1;
}

/// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(int n, int k);

}  // namespace nrcheck
