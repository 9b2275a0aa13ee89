#pragma once

#include <stdexcept>

#include "qsc/polynomial.hpp"

namespace qsc {

// Exact fraction of polynomials. Not gcd-normalized: equality is by
// cross-multiplication. A cheap content reduction (common monomial factor and
// rational content) keeps sizes down and output deterministic.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(Polynomial n) : num_(std::move(n)), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}

  RationalFunction(Polynomial n, Polynomial d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce_content();
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction operator-() const { return {-num_, den_, no_reduce{}}; }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  // (num' den - num den') / den^2
  RationalFunction derivative(VarId v) const {
    return {num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_};
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
  }

  // Equality of the cross-multiplied numerators up to total t-degree bound.
  friend bool equal_mod_t(const RationalFunction& a, const RationalFunction& b, int bound) {
    return (a.num_ * b.den_ - b.num_ * a.den_).truncate_t(bound).is_zero();
  }

  std::string str() const {
    if (den_ == Polynomial(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  struct no_reduce {};
  RationalFunction(Polynomial n, Polynomial d, no_reduce) : num_(std::move(n)), den_(std::move(d)) {}

  void reduce_content() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    // Common monomial factor of all terms of num and den.
    Monomial g = common_monomial(den_, Monomial{}, false);
    g = common_monomial(num_, g, true);
    if (!g.is_one()) {
      num_ = divide_monomial(num_, g);
      den_ = divide_monomial(den_, g);
    }
    // Rational content: scale so den has integer coprime coefficients with a
    // positive leading (largest-monomial) coefficient.
    Rational c = content(den_);
    if (den_.terms().rbegin()->second < 0) c = -c;
    if (c != 1) {
      Rational inv = Rational(1) / c;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  static Monomial common_monomial(const Polynomial& p, Monomial seed, bool use_seed) {
    bool first = !use_seed;
    Monomial g = seed;
    for (const auto& [m, c] : p.terms()) {
      if (first) {
        g = m;
        first = false;
      } else {
        g = gcd_monomial(g, m);
      }
      if (g.is_one()) break;
    }
    return g;
  }

  static Monomial gcd_monomial(const Monomial& a, const Monomial& b) {
    Monomial g;
    for (const auto& [v, e] : a.entries()) {
      int eb = b.exponent(v);
      int k = std::min(e, eb);
      if (k > 0) g = g * Monomial::var(v, k);
    }
    return g;
  }

  static Polynomial divide_monomial(const Polynomial& p, const Monomial& g) {
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
      Monomial q;
      for (const auto& [v, e] : m.entries()) {
        int k = e - g.exponent(v);
        if (k > 0) q = q * Monomial::var(v, k);
      }
      r.add_term(q, c);
    }
    return r;
  }

  static Rational content(const Polynomial& p) {
    Integer gn = 0, gd = 1;
    for (const auto& [m, c] : p.terms()) {
      gn = gcd(gn, numerator(c));
      gd = lcm(gd, denominator(c));
    }
    if (gn == 0) gn = 1;
    return Rational(gn, gd);
  }

  Polynomial num_, den_;
};

}  // namespace qsc
