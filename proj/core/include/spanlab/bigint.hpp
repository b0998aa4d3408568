#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace spanlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

// Natural log of a positive big integer, accurate to double precision.
inline double log_big(const BigInt& x) {
  if (x <= 0) return -INFINITY;
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 60) return std::log(x.convert_to<double>());
  const auto shift = bits - 52;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace spanlab
