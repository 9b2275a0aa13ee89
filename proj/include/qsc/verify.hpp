#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsc/json_io.hpp"
#include "qsc/lax.hpp"
#include "qsc/potential.hpp"

namespace qsc {

struct RunConfig {
  int n = 3;
  int trunc = -1;  // -1: default (4 for n=2, 3 otherwise)
  // Support selector: "all", "len<=k", or explicit "w1;w2;...".
  std::string support = "all";
  std::string cache_dir;
  int jobs = 1;
  bool run_lax = true;      // honored for n == 2 unless lax_n3 forces n == 3
  bool lax_n3 = false;      // the n = 3 Lax run is costly and off by default
  int product_rule_trials = 20;

  int effective_trunc() const { return trunc >= 0 ? trunc : (n == 2 ? 4 : 3); }
};

inline std::vector<Permutation> resolve_support(const RunConfig& cfg) {
  if (cfg.support == "all" || cfg.support.empty()) return all_permutations(cfg.n);
  if (cfg.support.rfind("len<=", 0) == 0) {
    int k = std::stoi(cfg.support.substr(5));
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(cfg.n))
      if (w.length() <= k) out.push_back(w);
    return out;
  }
  std::vector<Permutation> out;
  std::stringstream ss(cfg.support);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(parse_permutation(item));
  if (out.empty()) throw std::invalid_argument("support: empty");
  return out;
}

inline bool full_support(const RunConfig& cfg, const std::vector<Permutation>& sup) {
  return sup.size() == all_permutations(cfg.n).size();
}

// Structural checks on the Schubert tables themselves.
inline std::vector<CheckResult> schubert_checks(QuotientRing& ring) {
  std::vector<CheckResult> out;
  auto perms = all_permutations(ring.n());
  auto& table = ring.schubert();

  {
    bool ok = true;
    VarId aux{Alphabet::Y, 0};
    for (int k = 1; k <= 4; ++k)
      ok = ok && (quantum_e_generating(k, aux) == quantum_e_generating_determinant(k, aux));
    out.push_back({"delta_recurrence_vs_determinant", ok, 0, "k = 1..4"});
  }

  {
    bool homog = true, classical_ok = true, y_free = true;
    for (const auto& w : perms) {
      const Polynomial& quantum = table.quantum(w);
      homog = homog && quantum.is_graded_homogeneous(w.length());
      y_free = y_free && !quantum.uses_alphabet(Alphabet::Y);
      classical_ok = classical_ok &&
                     (quantum.set_alphabet_zero(Alphabet::Q) == classical_schubert_from_staircase(w));
    }
    out.push_back({"schubert_homogeneity", homog, 0, "graded degree l(w), deg q = 2"});
    out.push_back({"schubert_y_specialization", y_free, 0, ""});
    out.push_back({"classical_limit", classical_ok, 0, "q=0 vs staircase divided differences"});
  }
  return out;
}

inline std::vector<CheckResult> quotient_checks(QuotientRing& ring) {
  std::vector<CheckResult> out;
  auto perms = all_permutations(ring.n());
  const Permutation w0 = Permutation::longest_element(ring.n());

  {
    bool ok = true;
    std::size_t pairs = 0;
    for (const auto& u : perms)
      for (const auto& v : perms) {
        Polynomial p = ring.residue_element(
            ring.multiply(ring.schubert_element(u), ring.schubert_element(v)));
        Polynomial expected = (u == compose(w0, v)) ? Polynomial(1) : Polynomial(0);
        ok = ok && (p == expected);
        ++pairs;
      }
    out.push_back({"orthogonality_Q", ok, 0, std::to_string(pairs) + " pairs"});
  }

  {
    const Rational& det = ring.change_of_basis_det();
    bool ok = det == 1 || det == -1;
    out.push_back({"change_of_basis_det", ok, 0, "det = " + to_decimal_string(det)});
  }

  {
    bool nonneg = true, integral = true, degree_ok = true, classical_ok = true;
    for (const auto& u : perms)
      for (const auto& v : perms) {
        auto cs = ring.structure_constants(u, v);
        for (const auto& [w, c] : cs) {
          int expect_deg = u.length() + v.length() - w.length();
          degree_ok = degree_ok && expect_deg >= 0 && expect_deg % 2 == 0 &&
                      c.is_graded_homogeneous(expect_deg);
          for (const auto& [m, coeff] : c.terms()) {
            integral = integral && is_integer(coeff);
            nonneg = nonneg && coeff > 0;
          }
        }
        // q = 0 sector against the divided-difference oracle.
        for (const auto& w : perms) {
          Rational got = 0;
          auto it = cs.find(w);
          if (it != cs.end()) got = it->second.constant_term();
          classical_ok =
              classical_ok && (got == classical_structure_constant(ring.schubert(), u, v, w));
        }
      }
    out.push_back({"structure_constants_positive_integral", nonneg && integral, 0, ""});
    out.push_back({"structure_constants_degree_parity", degree_ok, 0, ""});
    out.push_back({"structure_constants_classical_limit", classical_ok, 0,
                   "q=0 vs divided-difference oracle"});
  }
  return out;
}

struct VerifyOutcome {
  ordered_json report;
  bool all_passed = true;
};

inline ordered_json check_to_json(const CheckResult& c) {
  ordered_json j;
  j["name"] = c.name;
  j["status"] = c.passed ? "pass" : "fail";
  j["certified_degree"] = c.certified_degree;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline VerifyOutcome run_verify_all(const RunConfig& cfg) {
  VerifyOutcome out;
  const int D = cfg.effective_trunc();
  auto sup = resolve_support(cfg);
  auto torder = t_order(cfg.n);

  out.report["n"] = cfg.n;
  out.report["D"] = D;
  out.report["support"] = ordered_json::array();
  for (const auto& w : sup) out.report["support"].push_back(w.one_line());

  QuotientRing ring(cfg.n, cfg.cache_dir);
  std::vector<CheckResult> checks;
  for (auto& c : schubert_checks(ring)) checks.push_back(c);
  for (auto& c : quotient_checks(ring)) checks.push_back(c);

  PotentialBundle bundle(ring, D, sup);
  out.report["F"] = polynomial_to_json(bundle.potential().poly, cfg.n, torder);

  if (full_support(cfg, sup)) {
    for (auto& c : bundle.defining_conditions_check()) checks.push_back(c);
    if (D >= 3) {
      for (auto& c : bundle.pde_checks()) checks.push_back(c);
    }
  }
  if (D >= 3)
    for (auto& c : bundle.wdvv_check(D - 3, cfg.jobs)) checks.push_back(c);
  for (auto& c : bundle.orthogonality_t_check()) checks.push_back(c);

  bool lax_enabled = cfg.run_lax && (cfg.n == 2 || (cfg.n == 3 && cfg.lax_n3));
  if (lax_enabled && full_support(cfg, sup)) {
    // One extra degree of kernel data absorbs the t-valuation lost when
    // dividing by the Gram-Schmidt norms, which vanish at t = 0.
    LaxSystem lax(ring, build_kernel(ring, D + 1, sup), D);
    checks.push_back(lax.product_rule_check(cfg.product_rule_trials));
    for (auto& c : lax.lax_checks()) checks.push_back(c);
  }

  out.report["checks"] = ordered_json::array();
  for (const auto& c : checks) {
    out.report["checks"].push_back(check_to_json(c));
    out.all_passed = out.all_passed && c.passed;
  }
  out.report["all_passed"] = out.all_passed;
  return out;
}

}  // namespace qsc
