#pragma once

#include <random>
#include <vector>

#include "qsc/potential.hpp"
#include "qsc/rational_function.hpp"

namespace qsc {

// Quotient element with rational-function coefficients in (q, t). The Lax
// construction divides by the norms F_u(t), which vanish at t = 0, so honest
// fractions replace series here.
struct RFElement {
  std::map<std::vector<int>, RationalFunction> coeffs;

  static RFElement from_quotient(const QuotientElement& e) {
    RFElement r;
    for (const auto& [k, p] : e.coeffs) r.coeffs[k] = RationalFunction(p);
    return r;
  }

  static RFElement basis_monomial(const std::vector<int>& key) {
    RFElement r;
    r.coeffs[key] = RationalFunction(1);
    return r;
  }

  bool is_zero() const {
    for (const auto& [k, c] : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  void add(const std::vector<int>& key, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }

  RFElement& operator+=(const RFElement& o) {
    for (const auto& [k, c] : o.coeffs) add(k, c);
    return *this;
  }
  RFElement& operator-=(const RFElement& o) {
    for (const auto& [k, c] : o.coeffs) add(k, -c);
    return *this;
  }
  friend RFElement operator+(RFElement a, const RFElement& b) { return a += b; }
  friend RFElement operator-(RFElement a, const RFElement& b) { return a -= b; }
  friend RFElement operator*(const RFElement& e, const RationalFunction& c) {
    RFElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : e.coeffs) r.add(k, v * c);
    return r;
  }

  RationalFunction coefficient(const std::vector<int>& key) const {
    auto it = coeffs.find(key);
    return it == coeffs.end() ? RationalFunction() : it->second;
  }

  RFElement derivative(VarId v) const {
    RFElement r;
    for (const auto& [k, c] : coeffs) r.add(k, c.derivative(v));
    return r;
  }
};

inline RFElement rf_multiply(QuotientRing& ring, const RFElement& a, const RFElement& b) {
  RFElement out;
  for (const auto& [ka, ca] : a.coeffs)
    for (const auto& [kb, cb] : b.coeffs) {
      RationalFunction c = ca * cb;
      if (c.is_zero()) continue;
      for (const auto& [key, qcoeff] : ring.basis_product(ka, kb).coeffs)
        out.add(key, c * RationalFunction(qcoeff));
    }
  return out;
}

inline RationalFunction rf_residue(QuotientRing& ring, const RFElement& h) {
  const auto& minv = ring.change_of_basis_inverse();
  const std::size_t last = ring.monomial_basis().size() - 1;
  RationalFunction out;
  for (const auto& [key, c] : h.coeffs) {
    int j = ring.monomial_rank(key);
    if (minv[j][last].is_zero()) continue;
    out += c * RationalFunction(minv[j][last]);
  }
  return out;
}

// Gram-Schmidt vectors X_w^t for the pairing <f,g>_t = <f g K>, processed in
// ascending lex order of the standard exponents, with their norms F_u(t).
struct GSBasis {
  std::vector<RFElement> vectors;        // indexed by basis rank
  std::vector<RationalFunction> norms;   // F_u = <X_u, X_u>_t
};

class LaxSystem {
 public:
  // Dividing by the norms F_u (which vanish at t = 0) costs one t-degree of
  // certainty, so the kernel passed in should be truncated one degree past the
  // bound the checks certify at. declared_trunc = -1 keeps kernel.trunc.
  LaxSystem(QuotientRing& ring, const Kernel& kernel, int declared_trunc = -1)
      : ring_(ring), kernel_(kernel),
        trunc_(declared_trunc >= 0 ? declared_trunc : kernel.trunc),
        torder_(t_order(ring.n())),
        kernel_rf_(RFElement::from_quotient(kernel.elem)) {}

  QuotientRing& ring() { return ring_; }
  int trunc() const { return trunc_; }
  VarId tvar(const Permutation& w) const { return var_t(t_rank(w, torder_)); }

  // <f, g>_t = <f g K>_{I~}.
  RationalFunction pairing_K(const RFElement& f, const RFElement& g) {
    return rf_residue(ring_, rf_multiply(ring_, rf_multiply(ring_, f, g), kernel_rf_));
  }

  const GSBasis& gram_schmidt() {
    if (!basis_.vectors.empty()) return basis_;
    const auto& mon = ring_.monomial_basis();  // already lex ascending
    for (std::size_t k = 0; k < mon.size(); ++k) {
      RFElement x = RFElement::basis_monomial(mon[k]);
      RFElement v = x;
      for (std::size_t j = 0; j < k; ++j) {
        RationalFunction c = pairing_K(x, basis_.vectors[j]) / basis_.norms[j];
        v -= basis_.vectors[j] * c;
      }
      RationalFunction norm = pairing_K(v, v);
      if (norm.is_zero())
        throw std::runtime_error("gram_schmidt: norm F_u vanishes identically at rank " +
                                 std::to_string(k));
      basis_.vectors.push_back(std::move(v));
      basis_.norms.push_back(std::move(norm));
    }
    return basis_;
  }

  using Matrix = std::vector<std::vector<RationalFunction>>;

  // Row u of L_w expands S~_w X_u^t over the X-basis; row u of M_w expands
  // dX_u^t/dt_w. The X-basis is lex-unitriangular over the monomials, so the
  // solve is an exact back-substitution.
  const Matrix& lax_L(const Permutation& w) {
    auto it = lmats_.find(w);
    if (it != lmats_.end()) return it->second;
    const auto& gs = gram_schmidt();
    RFElement sw = RFElement::from_quotient(ring_.schubert_element(w));
    Matrix m;
    for (std::size_t u = 0; u < gs.vectors.size(); ++u)
      m.push_back(expand_in_basis(rf_multiply(ring_, sw, gs.vectors[u])));
    return lmats_.emplace(w, std::move(m)).first->second;
  }

  const Matrix& lax_M(const Permutation& w) {
    auto it = mmats_.find(w);
    if (it != mmats_.end()) return it->second;
    const auto& gs = gram_schmidt();
    Matrix m;
    for (std::size_t u = 0; u < gs.vectors.size(); ++u)
      m.push_back(expand_in_basis(gs.vectors[u].derivative(tvar(w))));
    return mmats_.emplace(w, std::move(m)).first->second;
  }

  std::vector<RationalFunction> expand_in_basis(RFElement e) {
    const auto& gs = gram_schmidt();
    const auto& mon = ring_.monomial_basis();
    std::vector<RationalFunction> out(mon.size());
    for (std::size_t k = mon.size(); k-- > 0;) {
      RationalFunction c = e.coefficient(mon[k]);
      if (c.is_zero()) continue;
      out[k] = c;
      e -= gs.vectors[k] * c;
    }
    if (!e.is_zero()) throw std::logic_error("expand_in_basis: residual off the X-basis span");
    return out;
  }

  // The Lax equation, symmetrizability of L_w by the norm matrix, and the
  // matrix derivative of the norm matrix, plus the commuting-L internal
  // consistency check. Comparison clears denominators and truncates the
  // numerators at D minus the derivative order each identity consumes.
  std::vector<CheckResult> lax_checks() {
    const int D = trunc();
    auto perms = all_permutations(ring_.n());
    const auto& gs = gram_schmidt();
    const std::size_t N = gs.vectors.size();
    std::vector<CheckResult> out;

    {
      bool ok = true;
      for (const auto& u : perms)
        for (const auto& w : perms) {
          const Matrix& lw = lax_L(w);
          const Matrix& mu = lax_M(u);
          for (std::size_t i = 0; i < N && ok; ++i)
            for (std::size_t j = 0; j < N && ok; ++j) {
              RationalFunction lhs = lw[i][j].derivative(tvar(u));
              RationalFunction rhs;
              for (std::size_t k = 0; k < N; ++k)
                rhs += mu[i][k] * lw[k][j] - lw[i][k] * mu[k][j];
              ok = equal_mod_t(lhs, rhs, D - 1);
            }
        }
      out.push_back({"lax_equation", ok, D - 1, "dL_w/dt_u = [M_u, L_w]"});
    }

    {
      bool ok = true;
      for (const auto& w : perms) {
        const Matrix& lw = lax_L(w);
        for (std::size_t u = 0; u < N && ok; ++u)
          for (std::size_t v = u + 1; v < N && ok; ++v)
            ok = equal_mod_t(lw[u][v] * gs.norms[v], lw[v][u] * gs.norms[u], D);
      }
      out.push_back({"lax_symmetrizable", ok, D, "L_w F symmetric"});
    }

    {
      bool ok = true;
      for (const auto& w : perms) {
        const Matrix& lw = lax_L(w);
        const Matrix& mw = lax_M(w);
        for (std::size_t i = 0; i < N && ok; ++i)
          for (std::size_t j = 0; j < N && ok; ++j) {
            // (M_w F) + (M_w F)^T + (L_w F) on entry (i, j).
            RationalFunction lhs =
                mw[i][j] * gs.norms[j] + mw[j][i] * gs.norms[i] + lw[i][j] * gs.norms[j];
            RationalFunction rhs =
                (i == j) ? gs.norms[i].derivative(tvar(w)) : RationalFunction();
            ok = equal_mod_t(lhs, rhs, D - 1);
          }
      }
      out.push_back({"norm_matrix_derivative", ok, D - 1, "M~ + M~' + L~ = dF/dt_w"});
    }

    {
      bool ok = true;
      for (const auto& u : perms)
        for (const auto& w : perms) {
          if (!(u < w)) continue;
          const Matrix& lu = lax_L(u);
          const Matrix& lw = lax_L(w);
          for (std::size_t i = 0; i < N && ok; ++i)
            for (std::size_t j = 0; j < N && ok; ++j) {
              RationalFunction lhs, rhs;
              for (std::size_t k = 0; k < N; ++k) {
                lhs += lu[i][k] * lw[k][j];
                rhs += lw[i][k] * lu[k][j];
              }
              ok = equal_mod_t(lhs, rhs, D);
            }
        }
      out.push_back({"commuting_l_matrices", ok, D, "[L_u, L_w] = 0"});
    }

    return out;
  }

  // Product rule for the pairing on pseudo-random (f, g, w) triples.
  CheckResult product_rule_check(int count, unsigned seed = 20240814) {
    const int D = trunc();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> pick_t(0, static_cast<int>(torder_.size()) - 1);
    auto perms = all_permutations(ring_.n());
    const auto& mon = ring_.monomial_basis();

    auto random_element = [&]() {
      RFElement e;
      for (const auto& key : mon) {
        int c = coeff(rng);
        if (c == 0) continue;
        Polynomial p(c);
        if (coeff(rng) > 1) p = p * poly_t(static_cast<std::uint32_t>(pick_t(rng)));
        e.add(key, RationalFunction(p));
      }
      return e;
    };

    bool ok = true;
    for (int trial = 0; trial < count && ok; ++trial) {
      RFElement f = random_element(), g = random_element();
      const Permutation& w = perms[static_cast<std::size_t>(trial) % perms.size()];
      VarId tw = tvar(w);
      RationalFunction lhs = pairing_K(f, g).derivative(tw);
      RationalFunction rhs = pairing_K(f.derivative(tw), g) + pairing_K(f, g.derivative(tw)) +
                             pairing_K(rf_multiply(ring_, RFElement::from_quotient(
                                                              ring_.schubert_element(w)),
                                                   f),
                                       g);
      ok = equal_mod_t(lhs, rhs, D - 1);
    }
    return {"pairing_product_rule", ok, D - 1, std::to_string(count) + " random triples"};
  }

 private:
  QuotientRing& ring_;
  Kernel kernel_;
  int trunc_;
  std::vector<Permutation> torder_;
  RFElement kernel_rf_;
  GSBasis basis_;
  std::map<Permutation, Matrix> lmats_;
  std::map<Permutation, Matrix> mmats_;
};

}  // namespace qsc
