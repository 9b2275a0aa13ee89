#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "qsc/varid.hpp"

namespace qsc {

// Sparse exponent map, kept sorted by VarId with no zero exponents stored.
class Monomial {
 public:
  using Entry = std::pair<VarId, int>;

  Monomial() = default;

  static Monomial var(VarId v, int exp = 1) {
    Monomial m;
    if (exp != 0) m.entries_.push_back({v, exp});
    return m;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  int exponent(VarId v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, VarId x) { return e.first < x; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
  }

  int graded_degree() const {
    int d = 0;
    for (const auto& [v, e] : entries_) d += graded_weight(v.alph) * e;
    return d;
  }

  int degree_in(Alphabet a) const {
    int d = 0;
    for (const auto& [v, e] : entries_)
      if (v.alph == a) d += e;
    return d;
  }

  int t_degree() const { return degree_in(Alphabet::T); }

  bool has_alphabet(Alphabet a) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [a](const Entry& e) { return e.first.alph == a; });
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() || b != o.entries_.end()) {
      if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        r.entries_.push_back(*a++);
      } else if (a == entries_.end() || b->first < a->first) {
        r.entries_.push_back(*b++);
      } else {
        r.entries_.push_back({a->first, a->second + b->second});
        ++a, ++b;
      }
    }
    return r;
  }

  // Partial derivative support: m with the exponent of v lowered by one.
  // Pre: exponent(v) > 0.
  Monomial divide_var(VarId v) const {
    Monomial r;
    for (const auto& e : entries_) {
      if (e.first == v) {
        if (e.second > 1) r.entries_.push_back({e.first, e.second - 1});
      } else {
        r.entries_.push_back(e);
      }
    }
    return r;
  }

  // Remove every variable of alphabet a (exponents dropped), returning the
  // remaining monomial. Used for specializations like y = 0 and for splitting
  // off x-content during quotient-ring reduction.
  Monomial without_alphabet(Alphabet a) const {
    Monomial r;
    for (const auto& e : entries_)
      if (e.first.alph != a) r.entries_.push_back(e);
    return r;
  }

  // Swap the exponents of variables i and i+1 of alphabet a (the s_i action).
  Monomial swap_adjacent(Alphabet a, std::uint32_t i) const {
    VarId vi{a, i}, vj{a, i + 1};
    int ei = exponent(vi), ej = exponent(vj);
    if (ei == ej) return *this;
    Monomial r = without_var(vi).without_var(vj);
    if (ej != 0) r = r * var(vi, ej);
    if (ei != 0) r = r * var(vj, ei);
    return r;
  }

  Monomial without_var(VarId v) const {
    Monomial r;
    for (const auto& e : entries_)
      if (!(e.first == v)) r.entries_.push_back(e);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded lex: higher graded degree first; ties broken by exponents read
  // along the variable priority order (x1 > x2 > ... > q1 > ... > t).
  // Returns true if *this is smaller.
  bool operator<(const Monomial& o) const {
    int da = graded_degree(), db = o.graded_degree();
    if (da != db) return da < db;
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() && b != o.entries_.end()) {
      if (a->first != b->first) return b->first < a->first;
      if (a->second != b->second) return a->second < b->second;
      ++a, ++b;
    }
    return a == entries_.end() && b != o.entries_.end();
  }

  std::string str() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : entries_) {
      if (!s.empty()) s += "*";
      s += var_basic_name(v);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<Entry> entries_;
};

}  // namespace qsc
