#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qsc/quotient.hpp"

using namespace qsc;

TEST_CASE("standard monomial basis: exponents below the staircase, lex ascending") {
  QuotientRing r2(2), r3(3);
  CHECK(r2.monomial_basis() == std::vector<std::vector<int>>{{0, 0}, {1, 0}});
  CHECK(r3.monomial_basis().size() == 6);
  for (const auto& xexp : r3.monomial_basis()) {
    CHECK(xexp.size() == 3);
    for (int i = 0; i < 3; ++i) {
      CHECK(xexp[i] >= 0);
      CHECK(xexp[i] <= 2 - i);
    }
    CHECK(r3.is_standard(xexp));
  }
  CHECK(r3.monomial_basis().back() == std::vector<int>{2, 1, 0});  // staircase is lex-max
  // ranks are consistent with Lehmer codes of the indexing permutations
  for (const auto& w : all_permutations(3)) {
    std::vector<int> code = w.lehmer_code();
    CHECK(r3.monomial_rank(code) == r3.basis_rank(w));
  }
}

TEST_CASE("normal forms of small powers") {
  QuotientRing r2(2);
  CHECK(r2.normal_form(poly_x(1) * poly_x(1)).to_polynomial() == poly_q(1));
  CHECK(r2.normal_form(poly_x(1) + poly_x(2)).to_polynomial() == Polynomial(0));

  QuotientRing r3(3);
  Polynomial x1 = poly_x(1), x2 = poly_x(2), q1 = poly_q(1);
  CHECK(r3.normal_form(x1 * x1 * x1).to_polynomial() ==
        Polynomial(2) * q1 * x1 + q1 * x2);
  // every ideal generator reduces to zero
  for (const Polynomial& g : r3.generators())
    CHECK(r3.normal_form(g).is_zero());
}

TEST_CASE("normal form is a ring homomorphism on representatives") {
  QuotientRing r3(3);
  Polynomial a = poly_x(1) * poly_x(1) + poly_q(2);
  Polynomial b = poly_x(2) * poly_x(3) + poly_x(1);
  CHECK(r3.normal_form(a + b) == r3.normal_form(a) + r3.normal_form(b));
  CHECK(r3.normal_form(a * b) == r3.multiply(r3.normal_form(a), r3.normal_form(b)));
}

TEST_CASE("residue picks the staircase coefficient") {
  for (int n = 2; n <= 3; ++n) {
    QuotientRing ring(n);
    const Permutation w0 = Permutation::longest_element(n);
    for (const auto& w : all_permutations(n)) {
      Polynomial r = ring.residue_element(ring.schubert_element(w));
      CHECK(r == (w == w0 ? Polynomial(1) : Polynomial(0)));
    }
  }
}

TEST_CASE("residue pairing orthogonality") {
  for (int n = 2; n <= 3; ++n) {
    QuotientRing ring(n);
    const Permutation w0 = Permutation::longest_element(n);
    for (const auto& u : all_permutations(n))
      for (const auto& v : all_permutations(n)) {
        Polynomial p = ring.pairing_Q(ring.schubert().quantum(u), ring.schubert().quantum(v));
        CHECK(p == (u == compose(w0, v) ? Polynomial(1) : Polynomial(0)));
      }
  }
}

TEST_CASE("change of basis is unimodular and expansion round-trips") {
  for (int n = 2; n <= 3; ++n) {
    QuotientRing ring(n);
    const Rational& det = ring.change_of_basis_det();
    CHECK((det == 1 || det == -1));
    for (const auto& w : all_permutations(n)) {
      auto a = ring.schubert_expand(ring.schubert_element(w));
      for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == (static_cast<int>(i) == ring.basis_rank(w) ? Polynomial(1)
                                                                 : Polynomial(0)));
    }
  }
}

TEST_CASE("structure constants at n = 3") {
  QuotientRing ring(3);
  Permutation s1 = Permutation::simple(1, 3);
  auto cs = ring.structure_constants(s1, s1);
  // S~_{s1}^2 = S~_{312} + q1 S~_id
  CHECK(cs.size() == 2);
  CHECK(cs.at(Permutation({3, 1, 2})) == Polynomial(1));
  CHECK(cs.at(Permutation({1, 2, 3})) == poly_q(1));
  CHECK(ring.gw_invariant(s1, s1, Permutation({1, 2, 3}), {1, 0}) == 1);
  CHECK(ring.gw_invariant(s1, s1, Permutation({3, 1, 2}), {0, 0}) == 1);

  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3))
      for (const auto& [w, c] : ring.structure_constants(u, v)) {
        CHECK(!c.is_zero());
        int d = u.length() + v.length() - w.length();
        CHECK(d >= 0);
        CHECK(d % 2 == 0);
        CHECK(c.is_graded_homogeneous(d));
        for (const auto& [m, coeff] : c.terms()) {
          CHECK(is_integer(coeff));
          CHECK(coeff > 0);
        }
      }
}

TEST_CASE("structure constants match the divided-difference oracle at q = 0") {
  QuotientRing ring(3);
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3)) {
      auto cs = ring.structure_constants(u, v);
      for (const auto& w : all_permutations(3)) {
        Rational got = 0;
        if (auto it = cs.find(w); it != cs.end()) got = it->second.constant_term();
        CHECK(got == classical_structure_constant(ring.schubert(), u, v, w));
      }
    }
}

TEST_CASE("triple residue is symmetric and matches structure constants") {
  QuotientRing ring(3);
  const Permutation w0 = Permutation::longest_element(3);
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3)) {
      auto cs = ring.structure_constants(u, v);
      for (const auto& w : all_permutations(3)) {
        Polynomial t = ring.triple_residue(u, v, w);
        CHECK(t == ring.triple_residue(v, u, w));
        CHECK(t == ring.triple_residue(w, v, u));
        // <S_u S_v S_w> = c_{uv}^{w0 w}
        Polynomial expected;
        if (auto it = cs.find(compose(w0, w)); it != cs.end()) expected = it->second;
        CHECK(t == expected);
      }
    }
}

TEST_CASE("disk cache round-trips and survives corruption") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qsc_cache_test";
  fs::remove_all(dir);
  {
    QuotientRing ring(3, dir.string());
    (void)ring.normal_form(poly_x(1) * poly_x(1) * poly_x(1));
    (void)ring.change_of_basis_det();
  }
  CHECK(fs::exists(dir));
  CHECK(!fs::is_empty(dir));
  std::vector<Polynomial> fresh_expand;
  {
    QuotientRing ring(3, dir.string());  // warm start from cache
    CHECK(ring.normal_form(poly_x(1) * poly_x(1) * poly_x(1)).to_polynomial() ==
          Polynomial(2) * poly_q(1) * poly_x(1) + poly_q(1) * poly_x(2));
    CHECK((ring.change_of_basis_det() == 1 || ring.change_of_basis_det() == -1));
  }
  // corrupt every cache file; the ring must recompute, not crash
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ofstream out(entry.path(), std::ios::trunc);
    out << "{ not json";
  }
  {
    QuotientRing ring(3, dir.string());
    CHECK(ring.normal_form(poly_x(1) * poly_x(1) * poly_x(1)).to_polynomial() ==
          Polynomial(2) * poly_q(1) * poly_x(1) + poly_q(1) * poly_x(2));
  }
  fs::remove_all(dir);
}
