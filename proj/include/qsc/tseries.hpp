#pragma once

#include "qsc/polynomial.hpp"

namespace qsc {

// Polynomial in the t-variables truncated at total t-degree `order`
// (coefficients in Q[q]). The order records through which t-degree the
// content is certified; derivatives lower it by one.
struct TSeries {
  int order = 0;
  Polynomial poly;

  TSeries() = default;
  TSeries(int ord, Polynomial p) : order(ord), poly(p.truncate_t(ord)) {}

  bool is_zero() const { return poly.is_zero(); }

  friend TSeries operator+(const TSeries& a, const TSeries& b) {
    return {std::min(a.order, b.order), a.poly + b.poly};
  }
  friend TSeries operator-(const TSeries& a, const TSeries& b) {
    return {std::min(a.order, b.order), a.poly - b.poly};
  }
  friend TSeries operator*(const TSeries& a, const TSeries& b) {
    return {std::min(a.order, b.order), a.poly * b.poly};
  }
  friend TSeries operator*(const TSeries& a, const Rational& c) { return {a.order, a.poly * c}; }

  TSeries derivative(VarId v) const { return {order - 1, poly.derivative(v)}; }

  Polynomial at_t_zero() const { return poly.set_alphabet_zero(Alphabet::T); }

  friend bool operator==(const TSeries& a, const TSeries& b) {
    int bound = std::min(a.order, b.order);
    return (a.poly - b.poly).truncate_t(bound).is_zero();
  }
};

inline bool poly_equal_mod_t(const Polynomial& a, const Polynomial& b, int bound) {
  return (a - b).truncate_t(bound).is_zero();
}

}  // namespace qsc
