#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace turan {

// Exact copy / homomorphism counts. Unbounded, never wraps.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Count& c) { return c.str(); }

inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Count factorial(int n) {
  Count r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// n (n-1) ... (n-r+1); zero when r > n.
inline Count falling_factorial(int n, int r) {
  if (r > n) return 0;
  Count out = 1;
  for (int i = 0; i < r; ++i) out *= (n - i);
  return out;
}

}  // namespace turan
