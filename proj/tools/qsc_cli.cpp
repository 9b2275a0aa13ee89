#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsc/verify.hpp"

namespace {

using qsc::ordered_json;

struct Options {
  qsc::RunConfig cfg;
  std::string format = "json";
  std::string u, v, w;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--n", opt.cfg.n, "Rank of the symmetric group S_n")->check(CLI::Range(2, 4));
  cmd->add_option("--trunc", opt.cfg.trunc, "t-adic truncation degree D (-1: default)");
  cmd->add_option("--support", opt.cfg.support,
                  "t-support: 'all', 'len<=k', or 'w1;w2;...' one-line lists");
  cmd->add_option("--cache-dir", opt.cfg.cache_dir,
                  "Echelon/change-of-basis cache directory (default: $SCHUBERT_CACHE_DIR)");
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", opt.cfg.jobs, "Worker threads for independent check items")
      ->check(CLI::PositiveNumber);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int report_exit(const std::vector<qsc::CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return 1;
  return 0;
}

ordered_json checks_json(const std::vector<qsc::CheckResult>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) arr.push_back(qsc::check_to_json(c));
  return arr;
}

int cmd_basis(const Options& opt) {
  qsc::QuotientRing ring(opt.cfg.n, opt.cfg.cache_dir);
  auto torder = qsc::t_order(opt.cfg.n);
  ordered_json out;
  out["n"] = opt.cfg.n;
  out["monomials"] = ordered_json::array();
  for (const auto& xexp : ring.monomial_basis()) out["monomials"].push_back(xexp);
  out["permutations"] = ordered_json::array();
  for (const auto& w : ring.basis_permutations()) out["permutations"].push_back(w.one_line());
  out["schubert"] = ordered_json::object();
  for (const auto& w : ring.basis_permutations())
    out["schubert"][qsc::perm_key(w)] =
        qsc::polynomial_to_json(ring.schubert().quantum(w), opt.cfg.n, torder);
  emit(out);
  return 0;
}

int cmd_schubert(const Options& opt) {
  qsc::Permutation w = qsc::parse_permutation(opt.w);
  if (w.n() != opt.cfg.n) throw CLI::ValidationError("--w", "length disagrees with --n");
  qsc::SchubertTable table(opt.cfg.n);
  auto torder = qsc::t_order(opt.cfg.n);
  ordered_json out;
  out["n"] = opt.cfg.n;
  out["w"] = w.one_line();
  out["length"] = w.length();
  out["classical"] = qsc::polynomial_to_json(table.classical(w), opt.cfg.n, torder);
  out["quantum"] = qsc::polynomial_to_json(table.quantum(w), opt.cfg.n, torder);
  out["quantum_double"] = qsc::polynomial_to_json(table.quantum_double(w), opt.cfg.n, torder);
  emit(out);
  return 0;
}

int cmd_pairing(const Options& opt) {
  qsc::QuotientRing ring(opt.cfg.n, opt.cfg.cache_dir);
  qsc::Permutation u = qsc::parse_permutation(opt.u), v = qsc::parse_permutation(opt.v);
  auto torder = qsc::t_order(opt.cfg.n);
  qsc::Polynomial p = ring.residue_element(
      ring.multiply(ring.schubert_element(u), ring.schubert_element(v)));
  ordered_json out;
  out["n"] = opt.cfg.n;
  out["u"] = u.one_line();
  out["v"] = v.one_line();
  out["pairing"] = qsc::polynomial_to_json(p, opt.cfg.n, torder);
  out["display"] = qsc::polynomial_display(p, torder);
  emit(out);
  return 0;
}

int cmd_structconst(const Options& opt) {
  qsc::QuotientRing ring(opt.cfg.n, opt.cfg.cache_dir);
  qsc::Permutation u = qsc::parse_permutation(opt.u), v = qsc::parse_permutation(opt.v);
  auto torder = qsc::t_order(opt.cfg.n);
  auto cs = ring.structure_constants(u, v);
  if (opt.format == "csv") {
    std::cout << "u,v,w,c\n";
    for (const auto& [w, c] : cs)
      std::cout << '"' << qsc::perm_key(u) << "\",\"" << qsc::perm_key(v) << "\",\""
                << qsc::perm_key(w) << "\",\"" << qsc::polynomial_display(c, torder) << "\"\n";
    return 0;
  }
  ordered_json out;
  out["n"] = opt.cfg.n;
  out["u"] = u.one_line();
  out["v"] = v.one_line();
  out["constants"] = ordered_json::object();
  for (const auto& [w, c] : cs)
    out["constants"]["[" + qsc::perm_key(w) + "]"] = qsc::polynomial_display(c, torder);
  emit(out);
  return 0;
}

int cmd_potential(const Options& opt) {
  const int D = opt.cfg.effective_trunc();
  auto sup = qsc::resolve_support(opt.cfg);
  qsc::QuotientRing ring(opt.cfg.n, opt.cfg.cache_dir);
  qsc::PotentialBundle bundle(ring, D, sup);
  auto torder = qsc::t_order(opt.cfg.n);

  std::vector<qsc::CheckResult> checks;
  if (qsc::full_support(opt.cfg, sup)) {
    for (auto& c : bundle.defining_conditions_check()) checks.push_back(c);
    if (D >= 3)
      for (auto& c : bundle.pde_checks()) checks.push_back(c);
  }
  for (auto& c : bundle.orthogonality_t_check()) checks.push_back(c);

  ordered_json out;
  out["n"] = opt.cfg.n;
  out["D"] = D;
  out["support"] = ordered_json::array();
  for (const auto& w : sup) out["support"].push_back(w.one_line());
  out["F"] = qsc::polynomial_to_json(bundle.potential().poly, opt.cfg.n, torder);
  out["F_display"] = qsc::polynomial_display(bundle.potential().poly, torder);
  out["phi"] = ordered_json::object();
  for (const auto& w : qsc::all_permutations(opt.cfg.n))
    out["phi"][qsc::perm_key(w)] =
        qsc::polynomial_to_json(bundle.phi(w).poly, opt.cfg.n, torder);
  out["checks"] = checks_json(checks);
  emit(out);
  return report_exit(checks);
}

int cmd_wdvv(const Options& opt) {
  const int D = opt.cfg.effective_trunc();
  if (D < 3) throw CLI::ValidationError("--trunc", "WDVV needs D >= 3");
  auto sup = qsc::resolve_support(opt.cfg);
  qsc::QuotientRing ring(opt.cfg.n, opt.cfg.cache_dir);
  qsc::PotentialBundle bundle(ring, D, sup);
  auto checks = bundle.wdvv_check(D - 3, opt.cfg.jobs);
  ordered_json out;
  out["n"] = opt.cfg.n;
  out["D"] = D;
  out["checks"] = checks_json(checks);
  emit(out);
  return report_exit(checks);
}

int cmd_conditions(const Options& opt) {
  const int D = opt.cfg.effective_trunc();
  qsc::QuotientRing ring(opt.cfg.n, opt.cfg.cache_dir);
  qsc::PotentialBundle bundle(ring, D);
  auto checks = bundle.defining_conditions_check();
  ordered_json out;
  out["n"] = opt.cfg.n;
  out["D"] = D;
  out["checks"] = checks_json(checks);
  emit(out);
  return report_exit(checks);
}

int cmd_lax(const Options& opt) {
  if (opt.cfg.n != 2 && !opt.cfg.lax_n3)
    throw CLI::ValidationError("--n", "lax runs at n=2 (pass --allow-n3 for n=3)");
  const int D = opt.cfg.effective_trunc();
  qsc::QuotientRing ring(opt.cfg.n, opt.cfg.cache_dir);
  qsc::LaxSystem lax(ring, qsc::build_kernel(ring, D + 1), D);
  auto torder = qsc::t_order(opt.cfg.n);

  auto matrix_json = [&](const qsc::LaxSystem::Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m) {
      ordered_json r = ordered_json::array();
      for (const auto& e : row)
        r.push_back(qsc::rational_function_to_json(e, opt.cfg.n, torder));
      rows.push_back(r);
    }
    return rows;
  };

  ordered_json out;
  out["n"] = opt.cfg.n;
  out["D"] = D;
  out["L"] = ordered_json::object();
  out["M"] = ordered_json::object();
  for (const auto& w : qsc::all_permutations(opt.cfg.n)) {
    out["L"][qsc::perm_key(w)] = matrix_json(lax.lax_L(w));
    out["M"][qsc::perm_key(w)] = matrix_json(lax.lax_M(w));
  }
  std::vector<qsc::CheckResult> checks;
  checks.push_back(lax.product_rule_check(opt.cfg.product_rule_trials));
  for (auto& c : lax.lax_checks()) checks.push_back(c);
  out["checks"] = checks_json(checks);
  emit(out);
  return report_exit(checks);
}

int cmd_verify_all(const Options& opt) {
  auto outcome = qsc::run_verify_all(opt.cfg);
  emit(outcome.report);
  return outcome.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum Schubert calculus toolkit"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("SCHUBERT_CACHE_DIR")) opt.cfg.cache_dir = env;

  auto* basis = app.add_subcommand("basis", "Monomial basis and quantum Schubert tables");
  auto* schubert = app.add_subcommand("schubert", "Classical/quantum/double polynomial for one w");
  auto* pairing = app.add_subcommand("pairing", "Residue pairing <S_u, S_v>");
  auto* structconst = app.add_subcommand("structconst", "Structure constants of S_u * S_v");
  auto* potential = app.add_subcommand("potential", "Potential F(t), derivative tables, checks");
  auto* wdvv = app.add_subcommand("wdvv", "WDVV associativity residuals");
  auto* conditions = app.add_subcommand("conditions", "Defining conditions on F at t = 0");
  auto* lax = app.add_subcommand("lax", "Lax matrices L_w, M_w and matrix identities");
  auto* verify = app.add_subcommand("verify-all", "Run every check suite, emit one report");

  for (auto* cmd : {basis, schubert, pairing, structconst, potential, wdvv, conditions, lax, verify})
    add_common(cmd, opt);
  schubert->add_option("--w", opt.w, "Permutation, one-line (e.g. 3,2,1)")->required();
  for (auto* cmd : {pairing, structconst}) {
    cmd->add_option("--u", opt.u, "Permutation, one-line")->required();
    cmd->add_option("--v", opt.v, "Permutation, one-line")->required();
  }
  lax->add_flag("--allow-n3", opt.cfg.lax_n3, "Permit the costly n=3 Lax run");
  verify->add_flag("--allow-n3", opt.cfg.lax_n3, "Include the costly n=3 Lax suite");
  verify->add_option("--trials", opt.cfg.product_rule_trials, "Product-rule random trials");

  try {
    app.parse(argc, argv);
    if (basis->parsed()) return cmd_basis(opt);
    if (schubert->parsed()) return cmd_schubert(opt);
    if (pairing->parsed()) return cmd_pairing(opt);
    if (structconst->parsed()) return cmd_structconst(opt);
    if (potential->parsed()) return cmd_potential(opt);
    if (wdvv->parsed()) return cmd_wdvv(opt);
    if (conditions->parsed()) return cmd_conditions(opt);
    if (lax->parsed()) return cmd_lax(opt);
    if (verify->parsed()) return cmd_verify_all(opt);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
