#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsc/varid.hpp"

namespace qsc {

// Element of S_n in one-line notation (1-based values). Composition is
// right-to-left: compose(u, v)(i) = u(v(i)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
      if (v < 1 || v > static_cast<int>(w_.size()) || seen[v - 1])
        throw std::invalid_argument("Permutation: not a bijection of 1..n");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  static Permutation longest_element(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
  }

  // The simple transposition s_k = (k, k+1), 1 <= k <= n-1.
  static Permutation simple(int k, int n) {
    auto w = identity(n);
    std::swap(w.w_[k - 1], w.w_[k]);
    return w;
  }

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }  // 1-based
  const std::vector<int>& one_line() const { return w_; }

  bool is_identity() const {
    for (int i = 1; i <= n(); ++i)
      if (w_[i - 1] != i) return false;
    return true;
  }

  friend Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw std::invalid_argument("Permutation: mismatched n");
    std::vector<int> w(u.n());
    for (int i = 1; i <= u.n(); ++i) w[i - 1] = u(v(i));
    return Permutation(std::move(w));
  }

  Permutation inverse() const {
    std::vector<int> w(n());
    for (int i = 1; i <= n(); ++i) w[w_[i - 1] - 1] = i;
    return Permutation(std::move(w));
  }

  int length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
      for (int j = i + 1; j < n(); ++j)
        if (w_[i] > w_[j]) ++inv;
    return inv;
  }

  // code(w)_k = #{j > k : w(j) < w(k)}; always <= n-k componentwise.
  std::vector<int> lehmer_code() const {
    std::vector<int> code(n());
    for (int i = 0; i < n(); ++i)
      for (int j = i + 1; j < n(); ++j)
        if (w_[j] < w_[i]) ++code[i];
    return code;
  }

  static Permutation from_lehmer_code(const std::vector<int>& code) {
    int n = static_cast<int>(code.size());
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) {
      if (code[i] < 0 || code[i] >= static_cast<int>(pool.size()))
        throw std::invalid_argument("Permutation: invalid Lehmer code");
      w.push_back(pool[code[i]]);
      pool.erase(pool.begin() + code[i]);
    }
    return Permutation(std::move(w));
  }

  // Deterministic reduced word: repeatedly strip the smallest descent on the
  // right. Multiplying simple(word[0]) * ... * simple(word.back()) gives w.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    for (;;) {
      int i = 0;
      for (int k = 1; k < w.n(); ++k) {
        if (w.w_[k - 1] > w.w_[k]) {
          i = k;
          break;
        }
      }
      if (i == 0) break;
      std::swap(w.w_[i - 1], w.w_[i]);  // w <- w * s_i
      word.push_back(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
    return s + "]";
  }

 private:
  std::vector<int> w_;
};

// All of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Canonical t-variable order: by length, then lexicographic one-line. The
// rank of w in this list is the index of the variable t_w.
inline std::vector<Permutation> t_order(int n) {
  auto perms = all_permutations(n);
  std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
    return a.length() < b.length();
  });
  return perms;
}

inline std::uint32_t t_rank(const Permutation& w, const std::vector<Permutation>& order) {
  auto it = std::find(order.begin(), order.end(), w);
  if (it == order.end()) throw std::invalid_argument("t_rank: permutation not in order list");
  return static_cast<std::uint32_t>(it - order.begin());
}

}  // namespace qsc
