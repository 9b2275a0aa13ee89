#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsc/potential.hpp"

using namespace qsc;

namespace {

// n = 2 t-variables in canonical order: t0 <-> id, t1 <-> s1.
Polynomial tid() { return poly_t(0); }
Polynomial ts1() { return poly_t(1); }

}  // namespace

TEST_CASE("n = 2 kernel closed form at t-degree 2") {
  QuotientRing ring(2);
  Kernel k = build_kernel(ring, 2);
  Rational half = Rational(1) / 2;
  // coefficient of S~_id = 1 (basis key {0,0}) and of S~_s1 = x1 (key {1,0})
  Polynomial c_id = Polynomial(1) + tid() + tid() * tid() * half +
                    poly_q(1) * ts1() * ts1() * half;
  Polynomial c_s1 = ts1() + tid() * ts1();
  CHECK(k.elem.coefficient({0, 0}) == c_id);
  CHECK(k.elem.coefficient({1, 0}) == c_s1);
  // K at t = 0 is the unit
  QuotientElement at0 = k.elem.set_t_zero();
  CHECK(at0.coefficient({0, 0}) == Polynomial(1));
  CHECK(at0.coefficient({1, 0}) == Polynomial(0));
}

TEST_CASE("n = 2 potential closed form through t-degree 3") {
  QuotientRing ring(2);
  PotentialBundle bundle(ring, 3);
  Rational half = Rational(1) / 2, sixth = Rational(1) / 6;
  Polynomial expected = ts1() + tid() * ts1() + tid() * tid() * ts1() * half +
                        poly_q(1) * ts1() * ts1() * ts1() * sixth;
  CHECK(bundle.potential().poly == expected);
}

TEST_CASE("first derivatives of F at t = 0 point at the longest element") {
  for (int n = 2; n <= 3; ++n) {
    QuotientRing ring(n);
    PotentialBundle bundle(ring, 2);
    const Permutation w0 = Permutation::longest_element(n);
    for (const auto& w : all_permutations(n))
      CHECK(bundle.phi(w).at_t_zero() == (w == w0 ? Polynomial(1) : Polynomial(0)));
  }
}

TEST_CASE("kernel inverse through first order") {
  QuotientRing ring(2);
  PotentialBundle bundle(ring, 2);
  QuotientElement kinv = bundle.kernel_inverse_power(1);
  CHECK(kinv.coefficient({0, 0}).truncate_t(1) == Polynomial(1) - tid());
  CHECK(kinv.coefficient({1, 0}).truncate_t(1) == -ts1());
  // K * K^{-1} = 1 up to the truncation degree
  QuotientElement prod = ring.multiply(bundle.kernel().elem, kinv, bundle.trunc());
  CHECK(prod.coefficient({0, 0}) == Polynomial(1));
  CHECK(prod.coefficient({1, 0}) == Polynomial(0));
}

TEST_CASE("defining conditions on F hold at t = 0") {
  for (int n = 2; n <= 3; ++n) {
    QuotientRing ring(n);
    PotentialBundle bundle(ring, 3);
    for (const auto& c : bundle.defining_conditions_check()) {
      INFO(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("third derivative initial conditions recover q") {
  for (int n = 2; n <= 3; ++n) {
    QuotientRing ring(n);
    PotentialBundle bundle(ring, 3);
    const Permutation w0 = Permutation::longest_element(n);
    for (int k = 1; k < n; ++k) {
      Permutation sk = Permutation::simple(k, n);
      CHECK(bundle.lambda(sk, sk, w0).at_t_zero() == poly_q(static_cast<std::uint32_t>(k)));
    }
  }
}

TEST_CASE("derivative identity suite at n = 2, D = 3") {
  QuotientRing ring(2);
  PotentialBundle bundle(ring, 3);
  for (const auto& c : bundle.pde_checks()) {
    INFO(c.name);
    CHECK(c.passed);
  }
}

TEST_CASE("t-deformed polynomials specialize to the quantum ones at t = 0") {
  QuotientRing ring(3);
  PotentialBundle bundle(ring, 2);
  for (const auto& w : all_permutations(3))
    CHECK(bundle.t_schubert(w).set_t_zero() == ring.schubert_element(w).set_t_zero());
}

TEST_CASE("deformed orthogonality at D = 2") {
  for (int n = 2; n <= 3; ++n) {
    QuotientRing ring(n);
    PotentialBundle bundle(ring, 2);
    for (const auto& c : bundle.orthogonality_t_check()) {
      INFO(c.name);
      CHECK(c.passed);
      CHECK(c.certified_degree == 2);
    }
  }
}

TEST_CASE("associativity residuals vanish: n = 2, D = 4") {
  QuotientRing ring(2);
  PotentialBundle bundle(ring, 4);
  for (const auto& c : bundle.wdvv_check(1)) {
    INFO(c.name);
    CHECK(c.passed);
  }
  CHECK_THROWS_AS(bundle.wdvv_check(2), std::invalid_argument);
}

TEST_CASE("restricted support agrees with the full kernel on shared variables") {
  QuotientRing ring(2);
  std::vector<Permutation> sup{Permutation::simple(1, 2)};
  PotentialBundle full(ring, 3), part(ring, 3, sup);
  // setting t_id = 0 in the full potential recovers the restricted one
  CHECK(full.potential().poly.set_var_zero(var_t(0)) == part.potential().poly);
}
