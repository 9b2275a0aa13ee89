#pragma once

#include <array>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "qsc/quotient.hpp"
#include "qsc/tseries.hpp"

namespace qsc {

struct CheckResult {
  std::string name;
  bool passed = false;
  int certified_degree = 0;
  std::string detail;
};

// Projection of exp(sum_w t_w S~_w) onto the Schubert span, truncated at
// total t-degree D, for a chosen t-support.
struct Kernel {
  int n = 0;
  int trunc = 0;
  std::vector<Permutation> support;
  QuotientElement elem;  // coefficients in Q[q, t]
};

inline Kernel build_kernel(QuotientRing& ring, int trunc, std::vector<Permutation> support = {}) {
  if (support.empty()) support = all_permutations(ring.n());
  auto order = t_order(ring.n());

  QuotientElement generator;  // sum_w t_w S~_w
  for (const auto& w : support) {
    generator += ring.schubert_element(w) * poly_t(t_rank(w, order));
  }

  QuotientElement unit;
  unit.add(std::vector<int>(ring.n(), 0), Polynomial(1));

  // exp, term by term: every factor carries t-degree >= 1 so the sum stops
  // at the truncation order.
  Kernel k{ring.n(), trunc, std::move(support), unit};
  QuotientElement power = unit;
  for (int j = 1; j <= trunc; ++j) {
    power = ring.multiply(power, generator, trunc);
    if (power.is_zero()) break;
    k.elem += power * Polynomial(factorial_inverse(static_cast<unsigned>(j)));
  }
  return k;
}

// The toy potential F(t), its derivative tables, the t-deformed Schubert
// polynomials, and every identity check that lives at the potential level.
class PotentialBundle {
 public:
  PotentialBundle(QuotientRing& ring, int trunc, std::vector<Permutation> support = {})
      : ring_(ring),
        torder_(t_order(ring.n())),
        kernel_(build_kernel(ring, trunc, std::move(support))),
        f_(trunc, ring.residue_element(kernel_.elem)) {}

  QuotientRing& ring() { return ring_; }
  const Kernel& kernel() const { return kernel_; }
  int trunc() const { return kernel_.trunc; }
  const TSeries& potential() const { return f_; }
  const std::vector<Permutation>& support() const { return kernel_.support; }

  VarId tvar(const Permutation& w) const { return var_t(t_rank(w, torder_)); }
  const std::vector<Permutation>& torder() const { return torder_; }

  TSeries phi(const Permutation& w) const { return f_.derivative(tvar(w)); }
  TSeries alpha(const Permutation& u, const Permutation& w) const {
    return f_.derivative(tvar(u)).derivative(tvar(w));
  }
  TSeries lambda(const Permutation& u, const Permutation& w, const Permutation& tau) const {
    return f_.derivative(tvar(u)).derivative(tvar(w)).derivative(tvar(tau));
  }

  // S~_w^t = [K S~_w], exact through t-degree D.
  const QuotientElement& t_schubert(const Permutation& w) {
    auto it = tschub_.find(w);
    if (it != tschub_.end()) return it->second;
    QuotientElement e = ring_.multiply(kernel_.elem, ring_.schubert_element(w), trunc());
    return tschub_.emplace(w, std::move(e)).first->second;
  }

  // K^{-m} on the quotient, valid mod t-degree D. K = 1 + A with A of
  // positive t-valuation, so the geometric series terminates.
  QuotientElement kernel_inverse_power(int m) {
    if (m == 0) {
      QuotientElement unit;
      unit.add(std::vector<int>(ring_.n(), 0), Polynomial(1));
      return unit;
    }
    if (kinv_.is_zero()) {
      QuotientElement unit;
      unit.add(std::vector<int>(ring_.n(), 0), Polynomial(1));
      QuotientElement a = kernel_.elem - unit;
      QuotientElement acc = unit, power = unit;
      for (int j = 1; j <= trunc(); ++j) {
        power = ring_.multiply(power, a, trunc());
        if (power.is_zero()) break;
        if (j % 2)
          acc -= power;
        else
          acc += power;
      }
      kinv_ = std::move(acc);
    }
    QuotientElement out = kinv_;
    for (int j = 1; j < m; ++j) out = ring_.multiply(out, kinv_, trunc());
    return out;
  }

  // WDVV residual for every quadruple of supported indices, mod t-degree
  // `bound` (requires bound <= D - 3). The quadruple scan runs read-only
  // against a precomputed third-derivative table, so it parallelizes.
  std::vector<CheckResult> wdvv_check(int bound, int jobs = 1) {
    if (bound > trunc() - 3)
      throw std::invalid_argument("wdvv_check: bound exceeds D - 3");
    auto perms = all_permutations(ring_.n());
    const auto& sup = kernel_.support;

    std::map<std::array<std::uint32_t, 3>, Polynomial> third;
    auto key_of = [&](const Permutation& a, const Permutation& b, const Permutation& c) {
      std::array<std::uint32_t, 3> key{t_rank(a, torder_), t_rank(b, torder_), t_rank(c, torder_)};
      std::sort(key.begin(), key.end());
      return key;
    };
    for (const auto& a : sup)
      for (const auto& b : sup)
        for (const auto& v : perms) {
          auto key = key_of(a, b, v);
          if (third.count(key)) continue;
          third[key] = f_.poly.derivative(var_t(key[0])).derivative(var_t(key[1]))
                           .derivative(var_t(key[2]))
                           .truncate_t(bound);
        }
    Polynomial zero;
    auto lam = [&](const Permutation& a, const Permutation& b, const Permutation& c) -> const Polynomial& {
      auto it = third.find(key_of(a, b, c));
      return it == third.end() ? zero : it->second;
    };

    const Permutation w0 = Permutation::longest_element(ring_.n());
    std::vector<std::array<const Permutation*, 4>> quadruples;
    for (const auto& w1 : sup)
      for (const auto& w2 : sup)
        for (const auto& w3 : sup)
          for (const auto& w4 : sup) quadruples.push_back({&w1, &w2, &w3, &w4});

    std::atomic<std::size_t> failures{0};
    std::mutex detail_mutex;
    std::string first_failure;
    auto worker = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto& [w1, w2, w3, w4] = quadruples[i];
        Polynomial residual;
        for (const auto& v : perms) {
          Permutation w0v = compose(w0, v);
          residual += lam(*w1, *w2, v) * lam(w0v, *w3, *w4);
          residual -= lam(*w2, *w3, v) * lam(w0v, *w1, *w4);
        }
        if (!residual.truncate_t(bound).is_zero()) {
          ++failures;
          std::lock_guard<std::mutex> lock(detail_mutex);
          if (first_failure.empty())
            first_failure = w1->str() + w2->str() + w3->str() + w4->str();
        }
      }
    };
    if (jobs <= 1) {
      worker(0, quadruples.size());
    } else {
      std::vector<std::thread> threads;
      std::size_t chunk = (quadruples.size() + jobs - 1) / jobs;
      for (int j = 0; j < jobs; ++j) {
        std::size_t b = j * chunk, e = std::min(quadruples.size(), b + chunk);
        if (b < e) threads.emplace_back(worker, b, e);
      }
      for (auto& th : threads) th.join();
    }
    CheckResult r{"wdvv", failures == 0, bound,
                  std::to_string(quadruples.size()) + " quadruples" +
                      (failures ? ", first failure " + first_failure : "")};
    return {r};
  }

  // Derivative identities tying F, the kernel and the deformed polynomials
  // identity, each certified at D minus the derivative order it consumes.
  std::vector<CheckResult> pde_checks() {
    std::vector<CheckResult> out;
    const int D = trunc();
    auto perms = all_permutations(ring_.n());
    const Permutation w0 = Permutation::longest_element(ring_.n());

    // The kernel expansion coefficients are the first
    // derivatives of F.
    {
      auto a = ring_.schubert_expand(kernel_.elem);
      bool ok = true;
      for (const auto& w : perms) {
        Polynomial from_kernel = a[ring_.basis_rank(compose(w0, w))];
        ok = ok && poly_equal_mod_t(from_kernel, phi(w).poly, D - 1);
      }
      out.push_back({"potential_first_derivatives", ok, D - 1, "phi_w = dF/dt_w vs kernel expansion"});
    }

    // Expansion coefficients of S~_w^t are the second derivatives of F.
    {
      bool ok = true;
      for (const auto& w : perms) {
        auto a = ring_.schubert_expand(t_schubert(w));
        for (const auto& u : perms) {
          Polynomial coeff = a[ring_.basis_rank(compose(w0, u))];
          ok = ok && poly_equal_mod_t(coeff, alpha(u, w).poly, D - 2);
        }
      }
      out.push_back({"potential_second_derivatives", ok, D - 2, "alpha_{u,w} = d2F/dt_u dt_w"});
    }

    // dK/dt_w = S~_w^t.
    {
      bool ok = true;
      for (const auto& w : perms) {
        QuotientElement diff = kernel_.elem.derivative(tvar(w)) - t_schubert(w);
        ok = ok && diff.truncate_t(D - 1).is_zero();
      }
      out.push_back({"kernel_derivative", ok, D - 1, "dK/dt_w = t-deformed S~_w"});
    }

    // 4-point expansion: Lambda_{uwt} = sum_a phi_{w0 a} <SSSS>.
    {
      bool ok = true;
      for (const auto& u : perms)
        for (const auto& w : perms)
          for (const auto& tau : perms) {
            Polynomial rhs;
            for (const auto& a : perms) {
              Polynomial four = ring_.residue_element(ring_.multiply(
                  ring_.multiply(ring_.schubert_element(u), ring_.schubert_element(w)),
                  ring_.multiply(ring_.schubert_element(a), ring_.schubert_element(tau))));
              if (four.is_zero()) continue;
              rhs += phi(compose(w0, a)).poly * four;
            }
            ok = ok && poly_equal_mod_t(lambda(u, w, tau).poly, rhs, D - 3);
          }
      out.push_back({"four_point_expansion", ok, D - 3, "Lambda via 4-point residues"});
    }

    // [S~_u^t S~_w^t] = sum_tau Lambda_{uwtau} S~^t_{w0 tau}.
    {
      bool ok = true;
      for (const auto& u : perms)
        for (const auto& w : perms) {
          QuotientElement lhs = ring_.multiply(t_schubert(u), t_schubert(w), D);
          QuotientElement rhs;
          for (const auto& tau : perms)
            rhs += t_schubert(compose(w0, tau)) * lambda(u, w, tau).poly;
          ok = ok && (lhs - rhs).truncate_t(D - 3).is_zero();
        }
      out.push_back({"deformed_product_decomposition", ok, D - 3, "deformed product decomposition"});
    }

    // Delta_{u,w} F = 0 with the structure-constant operator.
    {
      bool ok = true;
      for (const auto& u : perms)
        for (const auto& w : perms) {
          Polynomial lhs = alpha(u, w).poly;
          Polynomial rhs;
          for (const auto& tau : perms) {
            auto cs = ring_.structure_constants(w, compose(w0, tau));
            auto it = cs.find(compose(w0, u));
            if (it == cs.end()) continue;
            rhs += it->second * phi(tau).poly;
          }
          ok = ok && poly_equal_mod_t(lhs, rhs, D - 2);
        }
      out.push_back({"potential_pde_system", ok, D - 2, "Delta_{u,w} F = 0"});
    }

    // Lambda at t = 0 equals the triple residue.
    {
      bool ok = true;
      for (const auto& u : perms)
        for (const auto& w : perms)
          for (const auto& tau : perms)
            ok = ok && (lambda(u, w, tau).at_t_zero() == ring_.triple_residue(u, w, tau));
      out.push_back({"triple_residue_at_origin", ok, 0, "third derivatives at t=0"});
    }

    // dS~_w^t/dt_u = sum_tau c~_{uw}^tau S~_tau^t.
    {
      bool ok = true;
      for (const auto& u : perms)
        for (const auto& w : perms) {
          QuotientElement lhs = t_schubert(w).derivative(tvar(u));
          QuotientElement rhs;
          for (const auto& [tau, c] : ring_.structure_constants(u, w)) rhs += t_schubert(tau) * c;
          ok = ok && (lhs - rhs).truncate_t(D - 1).is_zero();
        }
      out.push_back({"deformed_schubert_derivative", ok, D - 1, ""});
    }

    // The kernel satisfies the structure-constant PDE system,
    // coefficientwise.
    {
      bool ok = true;
      for (const auto& u : perms)
        for (const auto& w : perms) {
          QuotientElement lhs = kernel_.elem.derivative(tvar(u)).derivative(tvar(w));
          for (const auto& [tau, c] : ring_.structure_constants(u, w))
            lhs -= kernel_.elem.derivative(tvar(tau)) * c;
          ok = ok && lhs.truncate_t(D - 2).is_zero();
        }
      out.push_back({"kernel_pde_system", ok, D - 2, ""});
    }

    // Connection/star product: d/dt_u S~_w^t = [S~_u S~_w K] = sum Lambda S~_{w0 tau}.
    {
      bool ok_proj = true, ok_star = true;
      for (const auto& u : perms)
        for (const auto& w : perms) {
          QuotientElement deriv = t_schubert(w).derivative(tvar(u));
          QuotientElement proj = ring_.multiply(
              ring_.multiply(ring_.schubert_element(u), ring_.schubert_element(w)), kernel_.elem,
              D);
          ok_proj = ok_proj && (deriv - proj).truncate_t(D - 1).is_zero();
          QuotientElement star;
          for (const auto& tau : perms)
            star += ring_.schubert_element(compose(w0, tau)) * lambda(u, w, tau).poly;
          ok_star = ok_star && (deriv - star).truncate_t(D - 3).is_zero();
        }
      out.push_back({"connection_derivative", ok_proj, D - 1, "d/dt_u S~_w^t = [S~_u S~_w K]"});
      out.push_back({"star_product", ok_star, D - 3, "nabla_u S~_w = S~_u * S~_w"});
    }

    return out;
  }

  // The deformed polynomials are orthogonal for <f,g> = <f g K^{-2}>.
  std::vector<CheckResult> orthogonality_t_check() {
    const int D = trunc();
    auto perms = all_permutations(ring_.n());
    const Permutation w0 = Permutation::longest_element(ring_.n());
    QuotientElement kinv2 = kernel_inverse_power(2);
    bool ok = true;
    std::size_t pairs = 0;
    for (const auto& u : perms)
      for (const auto& w : perms) {
        QuotientElement prod =
            ring_.multiply(ring_.multiply(t_schubert(u), t_schubert(w), D), kinv2, D);
        Polynomial res = ring_.residue_element(prod);
        Polynomial expected = (u == compose(w0, w)) ? Polynomial(1) : Polynomial(0);
        ok = ok && poly_equal_mod_t(res, expected, D);
        ++pairs;
      }
    return {{"orthogonality_t", ok, D, std::to_string(pairs) + " pairs"}};
  }

  // The [KM] normalization / initial / degree conditions, checked at t = 0.
  std::vector<CheckResult> defining_conditions_check() {
    std::vector<CheckResult> out;
    auto perms = all_permutations(ring_.n());
    const Permutation w0 = Permutation::longest_element(ring_.n());
    const Permutation id = Permutation::identity(ring_.n());

    {
      bool ok = true;
      for (const auto& v : perms)
        for (const auto& w : perms) {
          Polynomial third = lambda(id, v, w).at_t_zero();
          Polynomial expected = (v == compose(w0, w)) ? Polynomial(1) : Polynomial(0);
          ok = ok && (third == expected);
        }
      out.push_back({"potential_normalization", ok, 0, "d3F/dt_id dt_v dt_w at t=0 (checked at t=0)"});
    }

    {
      bool ok = true;
      for (int k = 1; k <= ring_.n() - 1; ++k) {
        Permutation sk = Permutation::simple(k, ring_.n());
        Polynomial third = lambda(sk, sk, w0).at_t_zero();
        ok = ok && (third == poly_q(static_cast<std::uint32_t>(k)));
      }
      out.push_back({"potential_initial_conditions", ok, 0, "d3F/dt_{s_k}^2 dt_{w0} = q_k"});
    }

    {
      // Degree condition, stated with l(u)+l(v)+l(w) (the graded version).
      bool ok = true;
      int lw0 = w0.length();
      for (const auto& u : perms)
        for (const auto& v : perms)
          for (const auto& w : perms) {
            int total = u.length() + v.length() + w.length();
            bool must_vanish = total < lw0 || (total - lw0) % 2 != 0;
            if (must_vanish && !ring_.triple_residue(u, v, w).is_zero()) ok = false;
          }
      out.push_back({"potential_degree_conditions", ok, 0, ""});
    }
    return out;
  }

 private:
  QuotientRing& ring_;
  std::vector<Permutation> torder_;
  Kernel kernel_;
  TSeries f_;
  std::map<Permutation, QuotientElement> tschub_;
  QuotientElement kinv_;
};

}  // namespace qsc
