#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "qsc/permutation.hpp"
#include "qsc/polynomial.hpp"
#include "qsc/rational_function.hpp"

namespace qsc {

using ordered_json = nlohmann::ordered_json;

inline std::string perm_key(const Permutation& w) {
  std::string s;
  for (int i = 1; i <= w.n(); ++i) s += (i > 1 ? "," : "") + std::to_string(w(i));
  return s;
}

inline Permutation parse_permutation(std::string s) {
  std::erase(s, '[');
  std::erase(s, ']');
  std::erase(s, ' ');
  std::vector<int> w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) w.push_back(std::stoi(item));
  }
  return Permutation(std::move(w));
}

// Pretty variable name with permutation context for t-variables.
inline std::string var_display_name(VarId v, const std::vector<Permutation>& torder) {
  if (v.alph != Alphabet::T) return var_basic_name(v);
  return "t[" + perm_key(torder[v.index]) + "]";
}

inline ordered_json monomial_to_json(const Monomial& m, int n, const std::vector<Permutation>& torder) {
  std::vector<int> x(n, 0), y(n, 0), q(std::max(0, n - 1), 0);
  ordered_json t = ordered_json::array();
  for (const auto& [v, e] : m.entries()) {
    switch (v.alph) {
      case Alphabet::X:
        x[v.index - 1] = e;
        break;
      case Alphabet::Y:
        y[v.index - 1] = e;
        break;
      case Alphabet::Q:
        q[v.index - 1] = e;
        break;
      case Alphabet::T:
        t.push_back({torder[v.index].one_line(), e});
        break;
    }
  }
  ordered_json out;
  out["x"] = x;
  out["q"] = q;
  bool has_y = false;
  for (int e : y) has_y = has_y || e != 0;
  if (has_y) out["y"] = y;
  if (!t.empty()) out["t"] = t;
  return out;
}

// Sorted term list with decimal-string rationals.
inline ordered_json polynomial_to_json(const Polynomial& p, int n,
                                       const std::vector<Permutation>& torder) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json term;
    term["monomial"] = monomial_to_json(m, n, torder);
    term["num"] = numerator(c).str();
    term["den"] = denominator(c).str();
    terms.push_back(term);
  }
  return terms;
}

// Compact human-readable polynomial string with named t-variables.
inline std::string polynomial_display(const Polynomial& p, const std::vector<Permutation>& torder) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = to_decimal_string(c < 0 ? -c : c);
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (m.is_one()) {
      s += cs;
      continue;
    }
    std::string ms;
    for (const auto& [v, e] : m.entries()) {
      if (!ms.empty()) ms += "*";
      ms += var_display_name(v, torder);
      if (e != 1) ms += "^" + std::to_string(e);
    }
    if (cs != "1") s += cs + "*";
    s += ms;
  }
  return s;
}

inline ordered_json rational_function_to_json(const RationalFunction& f, int n,
                                              const std::vector<Permutation>& torder) {
  ordered_json out;
  out["num"] = polynomial_to_json(f.num(), n, torder);
  out["den"] = polynomial_to_json(f.den(), n, torder);
  return out;
}

}  // namespace qsc
