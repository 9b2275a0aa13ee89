#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qsc {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept canonical (gcd-reduced, positive
// denominator) by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_decimal_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

inline Rational factorial_inverse(unsigned k) {
  Integer f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return Rational(1, f);
}

}  // namespace qsc
