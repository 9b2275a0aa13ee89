#pragma once

#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsc/monomial.hpp"
#include "qsc/rational.hpp"

namespace qsc {

// Exact sparse multivariate polynomial over Rational. Canonical: the term map
// never stores zero coefficients, so equal polynomials have identical maps.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT: implicit by intent
    if (c != 0) terms_[Monomial{}] = c;
  }
  Polynomial(int c) : Polynomial(Rational(c)) {}

  static Polynomial monomial(const Monomial& m, const Rational& c = 1) {
    Polynomial p;
    if (c != 0) p.terms_[m] = c;
    return p;
  }
  static Polynomial variable(VarId v) { return monomial(Monomial::var(v)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Monomial{}); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Polynomial& a, const Rational& c) {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : a.terms_) r.terms_[m] = k * c;
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial derivative(VarId v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      int e = m.exponent(v);
      if (e > 0) r.add_term(m.divide_var(v), c * e);
    }
    return r;
  }

  // Drop every term of total t-degree > max_t_degree.
  Polynomial truncate_t(int max_t_degree) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
      if (m.t_degree() <= max_t_degree) r.terms_[m] = c;
    return r;
  }

  int max_t_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.t_degree());
    return d;
  }

  // Set every variable of alphabet a to zero.
  Polynomial set_alphabet_zero(Alphabet a) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
      if (!m.has_alphabet(a)) r.terms_[m] = c;
    return r;
  }

  Polynomial set_var_zero(VarId v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
      if (m.exponent(v) == 0) r.terms_[m] = c;
    return r;
  }

  // Apply the simple transposition s_i to alphabet a (swap z_i and z_{i+1}).
  Polynomial swap_adjacent(Alphabet a, std::uint32_t i) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.add_term(m.swap_adjacent(a, i), c);
    return r;
  }

  bool is_graded_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
      if (m.graded_degree() != degree) return false;
    return true;
  }

  int graded_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.graded_degree());
    return d;
  }

  std::map<int, Polynomial> graded_components() const {
    std::map<int, Polynomial> parts;
    for (const auto& [m, c] : terms_) parts[m.graded_degree()].terms_[m] = c;
    return parts;
  }

  // Coefficient of v^k, with v removed.
  Polynomial coefficient_of_power(VarId v, int k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
      if (m.exponent(v) == k) r.terms_[m.without_var(v)] = c;
    return r;
  }

  bool uses_alphabet(Alphabet a) const {
    for (const auto& [m, c] : terms_)
      if (m.has_alphabet(a)) return true;
    return false;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Print highest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string cs = to_decimal_string(c < 0 ? -c : c);
      s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (m.is_one()) {
        s += cs;
      } else {
        if (cs != "1") s += cs + "*";
        s += m.str();
      }
    }
    return s;
  }

 private:
  TermMap terms_;
};

inline Polynomial poly_x(std::uint32_t i) { return Polynomial::variable(var_x(i)); }
inline Polynomial poly_y(std::uint32_t i) { return Polynomial::variable(var_y(i)); }
inline Polynomial poly_q(std::uint32_t i) { return Polynomial::variable(var_q(i)); }
inline Polynomial poly_t(std::uint32_t rank) { return Polynomial::variable(var_t(rank)); }

}  // namespace qsc
