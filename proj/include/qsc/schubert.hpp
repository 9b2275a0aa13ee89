#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qsc/permutation.hpp"
#include "qsc/polynomial.hpp"

namespace qsc {

// Divided difference in the chosen alphabet:
//   (p - s_i p) / (z_i - z_{i+1}).
// Acts monomial by monomial via the closed form for z_i^a z_{i+1}^b, so the
// division is exact by construction.
inline Polynomial divided_difference(const Polynomial& p, std::uint32_t i, Alphabet alph) {
  VarId zi{alph, i}, zj{alph, i + 1};
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    int a = m.exponent(zi), b = m.exponent(zj);
    if (a == b) continue;
    Monomial rest = m.without_var(zi).without_var(zj);
    bool neg = a < b;
    int lo = std::min(a, b), hi = std::max(a, b);
    // (z_i^hi z_j^lo - z_i^lo z_j^hi) / (z_i - z_j) = sum of z_i^k z_j^{hi+lo-1-k}
    for (int k = lo; k <= hi - 1; ++k) {
      Monomial term = rest;
      if (k > 0) term = term * Monomial::var(zi, k);
      int other = hi + lo - 1 - k;
      if (other > 0) term = term * Monomial::var(zj, other);
      out.add_term(term, neg ? -c : c);
    }
  }
  return out;
}

// Compose divided differences along a reduced word of w (first letter applied
// last). Well-definedness across reduced words is a tested property.
inline Polynomial divided_difference_w(const Polynomial& p, const Permutation& w, Alphabet alph) {
  auto word = w.reduced_word();
  Polynomial r = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    r = divided_difference(r, static_cast<std::uint32_t>(*it), alph);
  return r;
}

// Generating polynomial Delta_k(t | X_k) for the quantum elementary symmetric
// polynomials, by the tridiagonal three-term recurrence
//   Delta_k = (x_k + t) Delta_{k-1} + q_{k-1} Delta_{k-2}.
// The coefficient of t^{k-i} is e_i(X_k | q).
inline Polynomial quantum_e_generating(int k, VarId tvar) {
  if (k < 0) throw std::invalid_argument("quantum_e_generating: k < 0");
  Polynomial prev2(1), prev(1);  // Delta_{-1} treated via the k=1 base case
  if (k == 0) return Polynomial(1);
  Polynomial t = Polynomial::variable(tvar);
  Polynomial cur = poly_x(1) + t;
  for (int j = 2; j <= k; ++j) {
    prev2 = prev;
    prev = cur;
    cur = (poly_x(j) + t) * prev + poly_q(j - 1) * prev2;
  }
  return cur;
}

// e_i(X_k | q), read off as the t^{k-i} coefficient of Delta_k. The auxiliary
// variable {Y,0} never occurs elsewhere (y indices are 1-based).
inline Polynomial quantum_elementary(int i, int k) {
  if (i < 0 || i > k) throw std::out_of_range("quantum_elementary: need 0 <= i <= k");
  VarId aux{Alphabet::Y, 0};
  return quantum_e_generating(k, aux).coefficient_of_power(aux, k - i);
}

// Delta_k(t | X_k) by full Leibniz expansion of the tridiagonal determinant:
// an independent route against the three-term recurrence.
inline Polynomial quantum_e_generating_determinant(int k, VarId tvar) {
  if (k == 0) return Polynomial(1);
  std::vector<std::vector<Polynomial>> a(k, std::vector<Polynomial>(k));
  for (int i = 0; i < k; ++i) {
    a[i][i] = poly_x(i + 1) + Polynomial::variable(tvar);
    if (i + 1 < k) {
      a[i][i + 1] = poly_q(i + 1);
      a[i + 1][i] = Polynomial(-1);
    }
  }
  Polynomial det;
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  do {
    int sign = 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Polynomial prod(1);
    bool zero = false;
    for (int i = 0; i < k && !zero; ++i) {
      if (a[i][perm[i]].is_zero()) zero = true;
      prod *= a[i][perm[i]];
    }
    if (!zero) det += sign > 0 ? prod : -prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Classical, quantum, and quantum double Schubert polynomials for fixed n.
class SchubertTable {
 public:
  explicit SchubertTable(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SchubertTable: n < 1");
    w0_ = Permutation::longest_element(n);
    // Top double polynomial: product of Delta_i(y_{n-i} | X_i).
    Polynomial top(1);
    for (int i = 1; i <= n - 1; ++i) top *= quantum_e_generating(i, var_y(n - i));
    double_by_u_[Permutation::identity(n)] = top;
  }

  int n() const { return n_; }
  const Permutation& w0() const { return w0_; }

  // Quantum double Schubert polynomial: apply y-alphabet divided differences
  // along w*w0 to the top element.
  const Polynomial& quantum_double(const Permutation& w) {
    return apply_y(compose(w, w0_));
  }

  const Polynomial& quantum(const Permutation& w) {
    auto it = quantum_.find(w);
    if (it != quantum_.end()) return it->second;
    Polynomial p = quantum_double(w).set_alphabet_zero(Alphabet::Y);
    return quantum_.emplace(w, std::move(p)).first->second;
  }

  const Polynomial& classical(const Permutation& w) {
    auto it = classical_.find(w);
    if (it != classical_.end()) return it->second;
    Polynomial p = quantum(w).set_alphabet_zero(Alphabet::Q);
    return classical_.emplace(w, std::move(p)).first->second;
  }

 private:
  // Memoized partial_{u}^{(y)} applied to the top element, keyed by u.
  const Polynomial& apply_y(const Permutation& u) {
    auto it = double_by_u_.find(u);
    if (it != double_by_u_.end()) return it->second;
    auto word = u.reduced_word();
    std::uint32_t first = static_cast<std::uint32_t>(word.front());
    const Polynomial& shorter = apply_y(compose(Permutation::simple(word.front(), n_), u));
    Polynomial p = divided_difference(shorter, first, Alphabet::Y);
    return double_by_u_.emplace(u, std::move(p)).first->second;
  }

  int n_;
  Permutation w0_;
  std::map<Permutation, Polynomial> double_by_u_;
  std::map<Permutation, Polynomial> quantum_;
  std::map<Permutation, Polynomial> classical_;
};

// Independent construction of the classical Schubert polynomial: x-alphabet
// divided differences applied to x^delta.
inline Polynomial classical_schubert_from_staircase(const Permutation& w) {
  int n = w.n();
  Monomial staircase;
  for (int i = 1; i <= n - 1; ++i) staircase = staircase * Monomial::var(var_x(i), n - i);
  Polynomial top = Polynomial::monomial(staircase);
  Permutation u = compose(w.inverse(), Permutation::longest_element(n));
  return divided_difference_w(top, u, Alphabet::X);
}

// Classical structure constant c_{uv}^w via divided differences only: the
// constant term of partial_w applied to S_u S_v. Schubert components indexed
// outside S_n are killed by every partial_w with w in S_n, so no quotient
// reduction is needed.
inline Rational classical_structure_constant(SchubertTable& table, const Permutation& u,
                                             const Permutation& v, const Permutation& w) {
  Polynomial prod = table.classical(u) * table.classical(v);
  return divided_difference_w(prod, w, Alphabet::X).constant_term();
}

}  // namespace qsc
