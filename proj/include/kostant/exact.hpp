#pragma once

// Arbitrary-precision integers and rationals used for every exact count and probability.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

namespace kostant {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_decimal(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Natural log of a positive big integer from its bit length and leading 53 bits.
inline double log_of(const BigInt& value) {
  if (value <= 0) return -INFINITY;
  const auto msb = static_cast<long>(boost::multiprecision::msb(value));
  if (msb < 53) return std::log(value.convert_to<double>());
  const long shift = msb - 52;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline double to_double(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (num == 0) return 0.0;
  const double sign = num < 0 ? -1.0 : 1.0;
  return sign * std::exp(log_of(num < 0 ? BigInt(-num) : num) - log_of(den));
}

inline Rational power(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace kostant
