#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qsc/schubert.hpp"

namespace qsc {

// Element of the free module H_n[q(,t)]: coefficients (polynomials in q and
// optionally t) indexed by standard x-exponents I contained in delta_n.
struct QuotientElement {
  std::map<std::vector<int>, Polynomial> coeffs;

  bool is_zero() const { return coeffs.empty(); }

  void add(const std::vector<int>& key, const Polynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace(key, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }

  QuotientElement& operator+=(const QuotientElement& o) {
    for (const auto& [k, p] : o.coeffs) add(k, p);
    return *this;
  }
  QuotientElement& operator-=(const QuotientElement& o) {
    for (const auto& [k, p] : o.coeffs) add(k, -p);
    return *this;
  }
  friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) { return a += b; }
  friend QuotientElement operator-(QuotientElement a, const QuotientElement& b) { return a -= b; }

  friend QuotientElement operator*(const QuotientElement& e, const Polynomial& p) {
    QuotientElement r;
    for (const auto& [k, c] : e.coeffs) r.add(k, c * p);
    return r;
  }
  friend QuotientElement operator*(const Polynomial& p, const QuotientElement& e) { return e * p; }

  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;

  QuotientElement derivative(VarId v) const {
    QuotientElement r;
    for (const auto& [k, c] : coeffs) r.add(k, c.derivative(v));
    return r;
  }

  QuotientElement truncate_t(int bound) const {
    QuotientElement r;
    for (const auto& [k, c] : coeffs) r.add(k, c.truncate_t(bound));
    return r;
  }

  QuotientElement set_t_zero() const {
    QuotientElement r;
    for (const auto& [k, c] : coeffs) r.add(k, c.set_alphabet_zero(Alphabet::T));
    return r;
  }

  Polynomial coefficient(const std::vector<int>& key) const {
    auto it = coeffs.find(key);
    return it == coeffs.end() ? Polynomial() : it->second;
  }

  // Back to an honest polynomial representative.
  Polynomial to_polynomial() const {
    Polynomial out;
    for (const auto& [k, c] : coeffs) {
      Monomial m;
      for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] > 0) m = m * Monomial::var(var_x(static_cast<std::uint32_t>(i + 1)), k[i]);
      out += Polynomial::monomial(m) * c;
    }
    return out;
  }
};

// The ring Q[x,q]/I~_n presented on the standard monomial basis
// {x^I : I subset delta_n}. Reduction is per-graded-degree exact linear
// algebra against the degree slice of the ideal; the Schubert basis is
// reached through a cached change-of-basis matrix over Q[q].
class QuotientRing {
 public:
  explicit QuotientRing(int n, std::string cache_dir = "")
      : n_(n), cache_dir_(std::move(cache_dir)), schubert_(n) {
    if (n < 1) throw std::invalid_argument("QuotientRing: n < 1");
    // Standard monomial basis, lex ascending.
    std::vector<int> cur(n, 0);
    enumerate_basis(cur, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      basis_index_[basis_[i]] = static_cast<int>(i);
      basis_perm_.push_back(Permutation::from_lehmer_code(basis_[i]));
    }
    for (int i = 1; i <= n; ++i) generators_.push_back(quantum_elementary(i, n));
    build_change_of_basis();
  }

  int n() const { return n_; }
  SchubertTable& schubert() { return schubert_; }
  const std::vector<std::vector<int>>& monomial_basis() const { return basis_; }
  const std::vector<Permutation>& basis_permutations() const { return basis_perm_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const Rational& change_of_basis_det() const { return det_; }

  int monomial_rank(const std::vector<int>& xexp) const { return basis_index_.at(xexp); }

  int basis_rank(const Permutation& w) const {
    auto it = basis_index_.find(w.lehmer_code());
    if (it == basis_index_.end()) throw std::invalid_argument("basis_rank: wrong n");
    return it->second;
  }

  bool is_standard(const std::vector<int>& xexp) const {
    for (int k = 0; k < n_; ++k)
      if (xexp[k] > n_ - 1 - k) return false;
    return true;
  }

  // Unique representative of f modulo I~_n on the standard monomial span.
  // Linear over the q and t content of f.
  QuotientElement normal_form(const Polynomial& f) {
    QuotientElement out;
    for (const auto& [m, c] : f.terms()) {
      if (m.has_alphabet(Alphabet::Y))
        throw std::invalid_argument("normal_form: y-variables not allowed");
      std::vector<int> xexp(n_, 0);
      for (const auto& [v, e] : m.entries())
        if (v.alph == Alphabet::X) {
          if (v.index < 1 || static_cast<int>(v.index) > n_)
            throw std::invalid_argument("normal_form: x index out of range");
          xexp[v.index - 1] = e;
        }
      Polynomial rest = Polynomial::monomial(m.without_alphabet(Alphabet::X), c);
      out += reduce_x_monomial(xexp) * rest;
    }
    return out;
  }

  // Product in the quotient via the cached basis-pair reduction table.
  // A negative t_bound means no truncation.
  QuotientElement multiply(const QuotientElement& a, const QuotientElement& b, int t_bound = -1) {
    QuotientElement out;
    for (const auto& [ka, ca] : a.coeffs) {
      for (const auto& [kb, cb] : b.coeffs) {
        Polynomial c = ca * cb;
        if (t_bound >= 0) c = c.truncate_t(t_bound);
        if (c.is_zero()) continue;
        out += basis_product(ka, kb) * c;
      }
    }
    if (t_bound >= 0) out = out.truncate_t(t_bound);
    return out;
  }

  const QuotientElement& basis_product(const std::vector<int>& I, const std::vector<int>& J) {
    auto key = std::make_pair(basis_index_.at(I), basis_index_.at(J));
    if (key.first > key.second) std::swap(key.first, key.second);
    auto it = product_table_.find(key);
    if (it != product_table_.end()) return it->second;
    std::vector<int> sum(n_);
    for (int k = 0; k < n_; ++k) sum[k] = I[k] + J[k];
    return product_table_.emplace(key, reduce_x_monomial(sum)).first->second;
  }

  // Coefficients a_w of h = sum_w a_w S~_w, as a vector over basis rank.
  std::vector<Polynomial> schubert_expand(const QuotientElement& h) const {
    std::vector<Polynomial> a(basis_.size());
    for (const auto& [key, c] : h.coeffs) {
      int j = basis_index_.at(key);
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (minv_[j][i].is_zero()) continue;
        a[i] += c * minv_[j][i];
      }
    }
    return a;
  }

  std::map<Permutation, Polynomial> schubert_expand_map(const QuotientElement& h) const {
    auto a = schubert_expand(h);
    std::map<Permutation, Polynomial> out;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) out[basis_perm_[i]] = a[i];
    return out;
  }

  // Grothendieck residue: the S~_{w0} coefficient of the expansion. The
  // staircase code is the lex-largest basis element, i.e. the last one.
  Polynomial residue_element(const QuotientElement& h) const {
    auto a = schubert_expand(h);
    return a.back();
  }

  Polynomial residue(const Polynomial& f) { return residue_element(normal_form(f)); }

  Polynomial pairing_Q(const Polynomial& f, const Polynomial& g) {
    return residue_element(multiply(normal_form(f), normal_form(g)));
  }

  // Reduced quantum Schubert polynomial as a quotient element (it already
  // lies on the standard span; checked structurally).
  const QuotientElement& schubert_element(const Permutation& w) {
    auto it = schubert_elements_.find(w);
    if (it != schubert_elements_.end()) return it->second;
    QuotientElement e = normal_form_standard(schubert_.quantum(w));
    return schubert_elements_.emplace(w, std::move(e)).first->second;
  }

  // Structure constants c~_{uv}^w(q): S~_u S~_v = sum_w c~ S~_w mod I~_n.
  std::map<Permutation, Polynomial> structure_constants(const Permutation& u, const Permutation& v) {
    return schubert_expand_map(multiply(schubert_element(u), schubert_element(v)));
  }

  // The q^d coefficient of c~_{uv}^w, d a multi-exponent in q_1..q_{n-1}.
  Rational gw_invariant(const Permutation& u, const Permutation& v, const Permutation& w,
                        const std::vector<int>& d) {
    auto cs = structure_constants(u, v);
    auto it = cs.find(w);
    if (it == cs.end()) return 0;
    Monomial qm;
    for (std::size_t k = 0; k < d.size(); ++k)
      if (d[k] > 0) qm = qm * Monomial::var(var_q(static_cast<std::uint32_t>(k + 1)), d[k]);
    return it->second.coefficient(qm);
  }

  // Triple residue <S~_u S~_v S~_w>.
  Polynomial triple_residue(const Permutation& u, const Permutation& v, const Permutation& w) {
    return residue_element(
        multiply(multiply(schubert_element(u), schubert_element(v)), schubert_element(w)));
  }

  // --- reduction internals, exposed for tests and cache tooling ---

  // Normal form of a pure x-monomial, cached.
  const QuotientElement& reduce_x_monomial(const std::vector<int>& xexp) {
    auto it = xreduce_cache_.find(xexp);
    if (it != xreduce_cache_.end()) return it->second;
    QuotientElement res;
    if (is_standard(xexp)) {
      bool zero = std::all_of(xexp.begin(), xexp.end(), [](int e) { return e == 0; });
      res.add(xexp, Polynomial(1));
      (void)zero;
    } else {
      int d = 0;
      for (int e : xexp) d += e;
      Slice& s = slice(d);
      std::map<int, Rational> v;
      v[s.column_index.at({xexp, std::vector<int>(n_ - 1, 0)})] = 1;
      s.reduce(v);
      for (const auto& [col, c] : v) {
        const auto& [A, gamma] = s.columns[col];
        if (!is_standard(A))
          throw std::logic_error("quotient reduction: residual outside standard span");
        Monomial qm;
        for (int k = 0; k < n_ - 1; ++k)
          if (gamma[k] > 0) qm = qm * Monomial::var(var_q(k + 1), gamma[k]);
        res.add(A, Polynomial::monomial(qm, c));
      }
    }
    return xreduce_cache_.emplace(xexp, std::move(res)).first->second;
  }

  struct Slice {
    // Column key: (x-exponent, q-exponent); columns ordered non-standard-x
    // first so echelon pivots avoid the standard monomials.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> columns;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> column_index;
    // Reduced echelon rows keyed by pivot column; pivot coefficient is 1 and
    // every entry of a row sits at or after its pivot.
    std::map<int, std::map<int, Rational>> rows;

    void reduce(std::map<int, Rational>& v) const {
      auto it = v.begin();
      while (it != v.end()) {
        int c = it->first;
        auto rit = rows.find(c);
        if (rit == rows.end()) {
          ++it;
          continue;
        }
        Rational f = it->second;
        for (const auto& [col, rc] : rit->second) {
          auto [vit, inserted] = v.try_emplace(col, Rational(0));
          vit->second -= f * rc;
          if (vit->second == 0) v.erase(vit);
        }
        it = v.upper_bound(c);
      }
    }
  };

  Slice& slice(int degree) {
    auto it = slices_.find(degree);
    if (it != slices_.end()) return it->second;
    Slice s;
    if (!load_slice(degree, s)) {
      build_slice(degree, s);
      save_slice(degree, s);
    }
    return slices_.emplace(degree, std::move(s)).first->second;
  }

  // Change-of-basis matrix over Q[q]: row i gives S~_{w_i} on the monomial
  // basis. Its inverse and determinant certify the basis property.
  const std::vector<std::vector<Polynomial>>& change_of_basis() const { return m_; }
  const std::vector<std::vector<Polynomial>>& change_of_basis_inverse() const { return minv_; }

 private:
  void enumerate_basis(std::vector<int>& cur, int pos) {
    if (pos == n_) {
      basis_.push_back(cur);
      return;
    }
    for (int e = 0; e <= n_ - 1 - pos; ++e) {
      cur[pos] = e;
      enumerate_basis(cur, pos + 1);
    }
    cur[pos] = 0;
  }

  QuotientElement normal_form_standard(const Polynomial& p) {
    QuotientElement e = normal_form(p);
    // Quantum Schubert polynomials must land on the standard span untouched.
    if (e.to_polynomial() != p)
      throw std::logic_error("schubert_element: polynomial not on standard span");
    return e;
  }

  void build_slice(int degree, Slice& s) {
    // Columns: all x^A q^gamma with |A| + 2|gamma| = degree.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> standard_cols;
    for (int qdeg = 0; 2 * qdeg <= degree; ++qdeg) {
      for (auto& gamma : compositions(qdeg, n_ - 1)) {
        for (auto& A : compositions(degree - 2 * qdeg, n_)) {
          if (is_standard(A))
            standard_cols.push_back({A, gamma});
          else
            s.columns.push_back({A, gamma});
        }
      }
    }
    std::sort(s.columns.begin(), s.columns.end());
    std::sort(standard_cols.begin(), standard_cols.end());
    s.columns.insert(s.columns.end(), standard_cols.begin(), standard_cols.end());
    for (std::size_t i = 0; i < s.columns.size(); ++i)
      s.column_index[s.columns[i]] = static_cast<int>(i);

    // Rows: x^B q^gamma * e~_i over all multipliers of complementary degree.
    for (int i = 1; i <= n_; ++i) {
      const Polynomial& gen = generators_[i - 1];
      int rem = degree - i;
      if (rem < 0) continue;
      for (int qdeg = 0; 2 * qdeg <= rem; ++qdeg) {
        for (auto& gamma : compositions(qdeg, n_ - 1)) {
          for (auto& B : compositions(rem - 2 * qdeg, n_)) {
            std::map<int, Rational> row;
            for (const auto& [m, c] : gen.terms()) {
              std::vector<int> A = B, G = gamma;
              for (const auto& [v, e] : m.entries()) {
                if (v.alph == Alphabet::X)
                  A[v.index - 1] += e;
                else
                  G[v.index - 1] += e;
              }
              int col = s.column_index.at({A, G});
              auto [it, ins] = row.try_emplace(col, c);
              if (!ins) {
                it->second += c;
                if (it->second == 0) row.erase(it);
              }
            }
            insert_row(s, std::move(row));
          }
        }
      }
    }
  }

  static void insert_row(Slice& s, std::map<int, Rational> row) {
    s.reduce(row);
    if (row.empty()) return;
    int pivot = row.begin()->first;
    Rational lead = row.begin()->second;
    for (auto& [col, c] : row) c /= lead;
    // Clear the new pivot column from the existing rows.
    for (auto& [p, existing] : s.rows) {
      auto hit = existing.find(pivot);
      if (hit == existing.end()) continue;
      Rational f = hit->second;
      for (const auto& [col, c] : row) {
        auto [it, ins] = existing.try_emplace(col, Rational(0));
        it->second -= f * c;
        if (it->second == 0) existing.erase(it);
      }
    }
    s.rows.emplace(pivot, std::move(row));
  }

  static std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts == 0) {
      if (total == 0) out.push_back({});
      return out;
    }
    std::vector<int> cur(parts, 0);
    compositions_rec(total, 0, cur, out);
    return out;
  }
  static void compositions_rec(int remaining, int pos, std::vector<int>& cur,
                               std::vector<std::vector<int>>& out) {
    if (pos + 1 == static_cast<int>(cur.size())) {
      cur[pos] = remaining;
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      compositions_rec(remaining - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
  }

  void build_change_of_basis() {
    const std::size_t N = basis_.size();
    if (load_change_of_basis()) return;
    m_.assign(N, std::vector<Polynomial>(N));
    for (std::size_t i = 0; i < N; ++i) {
      const Polynomial& p = schubert_.quantum(basis_perm_[i]);
      for (const auto& [mono, c] : p.terms()) {
        std::vector<int> A(n_, 0), gamma(n_ - 1, 0);
        for (const auto& [v, e] : mono.entries()) {
          if (v.alph == Alphabet::X)
            A[v.index - 1] = e;
          else if (v.alph == Alphabet::Q)
            gamma[v.index - 1] = e;
          else
            throw std::logic_error("change_of_basis: unexpected alphabet");
        }
        if (!is_standard(A))
          throw std::logic_error("change_of_basis: quantum Schubert off the standard span");
        Monomial qm;
        for (int k = 0; k < n_ - 1; ++k)
          if (gamma[k] > 0) qm = qm * Monomial::var(var_q(k + 1), gamma[k]);
        m_[i][basis_index_.at(A)] += Polynomial::monomial(qm, c);
      }
    }

    // Split M = M0 + M+, with M0 the q-free part. M0 is a scalar matrix;
    // M^{-1} = sum_k (-M0^{-1} M+)^k M0^{-1}, a finite sum because M+ raises
    // q-degree strictly.
    std::vector<std::vector<Rational>> m0(N, std::vector<Rational>(N));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m0[i][j] = m_[i][j].constant_term();
    std::vector<std::vector<Rational>> m0inv;
    det_ = invert_scalar(m0, m0inv);

    std::vector<std::vector<Polynomial>> mplus(N, std::vector<Polynomial>(N));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        mplus[i][j] = m_[i][j] - Polynomial(m_[i][j].constant_term());

    std::vector<std::vector<Polynomial>> p(N, std::vector<Polynomial>(N));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k)
          p[i][j] += mplus[k][j] * m0inv[i][k];  // P = M0^{-1} M+

    std::vector<std::vector<Polynomial>> m0inv_poly(N, std::vector<Polynomial>(N));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m0inv_poly[i][j] = Polynomial(m0inv[i][j]);

    minv_ = m0inv_poly;
    std::vector<std::vector<Polynomial>> power = p;
    int guard = 0;
    while (!matrix_zero(power)) {
      if (++guard > n_ * n_) throw std::logic_error("change_of_basis: Neumann series did not terminate");
      // minv += (-1)^guard power * M0^{-1}
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          Polynomial acc;
          for (std::size_t k = 0; k < N; ++k) acc += power[i][k] * m0inv_poly[k][j];
          if (guard % 2)
            minv_[i][j] -= acc;
          else
            minv_[i][j] += acc;
        }
      power = matrix_mul(power, p);
    }

    // One-time certificate: minv * m = identity.
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Polynomial acc;
        for (std::size_t k = 0; k < N; ++k) acc += minv_[i][k] * m_[k][j];
        if (acc != (i == j ? Polynomial(1) : Polynomial()))
          throw std::logic_error("change_of_basis: inverse certification failed");
      }
    save_change_of_basis();
  }

  static Rational invert_scalar(std::vector<std::vector<Rational>> a,
                                std::vector<std::vector<Rational>>& inv) {
    const std::size_t N = a.size();
    inv.assign(N, std::vector<Rational>(N));
    for (std::size_t i = 0; i < N; ++i) inv[i][i] = 1;
    Rational det = 1;
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t piv = col;
      while (piv < N && a[piv][col] == 0) ++piv;
      if (piv == N) throw std::logic_error("change_of_basis: singular q=0 matrix");
      if (piv != col) {
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        det = -det;
      }
      Rational lead = a[col][col];
      det *= lead;
      for (std::size_t j = 0; j < N; ++j) {
        a[col][j] /= lead;
        inv[col][j] /= lead;
      }
      for (std::size_t i = 0; i < N; ++i) {
        if (i == col || a[i][col] == 0) continue;
        Rational f = a[i][col];
        for (std::size_t j = 0; j < N; ++j) {
          a[i][j] -= f * a[col][j];
          inv[i][j] -= f * inv[col][j];
        }
      }
    }
    return det;
  }

  static bool matrix_zero(const std::vector<std::vector<Polynomial>>& m) {
    for (const auto& row : m)
      for (const auto& e : row)
        if (!e.is_zero()) return false;
    return true;
  }

  static std::vector<std::vector<Polynomial>> matrix_mul(
      const std::vector<std::vector<Polynomial>>& a, const std::vector<std::vector<Polynomial>>& b) {
    const std::size_t N = a.size();
    std::vector<std::vector<Polynomial>> r(N, std::vector<Polynomial>(N));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        if (a[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < N; ++j) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  }

  // --- disk cache (schema-versioned JSON, rationals as decimal strings) ---

  static constexpr int kCacheSchema = 1;

  std::filesystem::path slice_path(int degree) const {
    return std::filesystem::path(cache_dir_) /
           ("echelon_n" + std::to_string(n_) + "_d" + std::to_string(degree) + ".json");
  }
  std::filesystem::path chgbasis_path() const {
    return std::filesystem::path(cache_dir_) / ("chgbasis_n" + std::to_string(n_) + ".json");
  }

  bool load_slice(int degree, Slice& s) const {
    if (cache_dir_.empty()) return false;
    std::ifstream in(slice_path(degree));
    if (!in) return false;
    nlohmann::json j;
    try {
      in >> j;
      if (j.at("schema") != kCacheSchema || j.at("n") != n_ || j.at("degree") != degree)
        return false;
      for (const auto& col : j.at("columns")) {
        s.columns.push_back({col.at("x").get<std::vector<int>>(), col.at("q").get<std::vector<int>>()});
      }
      for (std::size_t i = 0; i < s.columns.size(); ++i)
        s.column_index[s.columns[i]] = static_cast<int>(i);
      for (const auto& row : j.at("rows")) {
        std::map<int, Rational> r;
        for (const auto& entry : row.at("entries"))
          r[entry.at(0).get<int>()] = rational_from_string(entry.at(1).get<std::string>());
        s.rows[row.at("pivot").get<int>()] = std::move(r);
      }
      return true;
    } catch (...) {
      return false;  // corrupt or mismatched cache: recompute
    }
  }

  void save_slice(int degree, const Slice& s) const {
    if (cache_dir_.empty()) return;
    nlohmann::ordered_json j;
    j["schema"] = kCacheSchema;
    j["n"] = n_;
    j["degree"] = degree;
    j["columns"] = nlohmann::json::array();
    for (const auto& [A, gamma] : s.columns) j["columns"].push_back({{"x", A}, {"q", gamma}});
    j["rows"] = nlohmann::json::array();
    for (const auto& [pivot, row] : s.rows) {
      nlohmann::ordered_json entries = nlohmann::json::array();
      for (const auto& [col, c] : row) entries.push_back({col, to_decimal_string(c)});
      j["rows"].push_back({{"pivot", pivot}, {"entries", entries}});
    }
    write_cache_file(slice_path(degree), j);
  }

  bool load_change_of_basis() {
    if (cache_dir_.empty()) return false;
    std::ifstream in(chgbasis_path());
    if (!in) return false;
    nlohmann::json j;
    try {
      in >> j;
      if (j.at("schema") != kCacheSchema || j.at("n") != n_) return false;
      det_ = rational_from_string(j.at("det").get<std::string>());
      m_ = load_poly_matrix(j.at("m"));
      minv_ = load_poly_matrix(j.at("minv"));
      return m_.size() == basis_.size();
    } catch (...) {
      return false;
    }
  }

  void save_change_of_basis() const {
    if (cache_dir_.empty()) return;
    nlohmann::ordered_json j;
    j["schema"] = kCacheSchema;
    j["n"] = n_;
    j["det"] = to_decimal_string(det_);
    j["m"] = dump_poly_matrix(m_);
    j["minv"] = dump_poly_matrix(minv_);
    write_cache_file(chgbasis_path(), j);
  }

  nlohmann::ordered_json dump_poly_matrix(const std::vector<std::vector<Polynomial>>& m) const {
    nlohmann::ordered_json out = nlohmann::json::array();
    for (const auto& row : m) {
      nlohmann::ordered_json jrow = nlohmann::json::array();
      for (const auto& p : row) {
        nlohmann::ordered_json terms = nlohmann::json::array();
        for (const auto& [mono, c] : p.terms()) {
          std::vector<int> gamma(n_ - 1, 0);
          for (const auto& [v, e] : mono.entries()) gamma[v.index - 1] = e;
          terms.push_back({{"q", gamma}, {"c", to_decimal_string(c)}});
        }
        jrow.push_back(terms);
      }
      out.push_back(jrow);
    }
    return out;
  }

  std::vector<std::vector<Polynomial>> load_poly_matrix(const nlohmann::json& j) const {
    std::vector<std::vector<Polynomial>> out;
    for (const auto& jrow : j) {
      std::vector<Polynomial> row;
      for (const auto& jp : jrow) {
        Polynomial p;
        for (const auto& term : jp) {
          Monomial qm;
          auto gamma = term.at("q").get<std::vector<int>>();
          for (std::size_t k = 0; k < gamma.size(); ++k)
            if (gamma[k] > 0)
              qm = qm * Monomial::var(var_q(static_cast<std::uint32_t>(k + 1)), gamma[k]);
          p.add_term(qm, rational_from_string(term.at("c").get<std::string>()));
        }
        row.push_back(std::move(p));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  static void write_cache_file(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (out) out << j.dump(1) << "\n";
  }

  int n_;
  std::string cache_dir_;
  SchubertTable schubert_;
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, int> basis_index_;
  std::vector<Permutation> basis_perm_;
  std::vector<Polynomial> generators_;
  std::map<int, Slice> slices_;
  std::map<std::vector<int>, QuotientElement> xreduce_cache_;
  std::map<std::pair<int, int>, QuotientElement> product_table_;
  std::map<Permutation, QuotientElement> schubert_elements_;
  std::vector<std::vector<Polynomial>> m_, minv_;
  Rational det_;
};

}  // namespace qsc
