#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qsc {

// Variable alphabets. x/y/q are indexed 1-based; t-variables are indexed by
// the rank of a permutation in the canonical t-order (see permutation.hpp).
// The enum order fixes the variable priority for the monomial order:
// x1 > x2 > ... > y1 > ... > q1 > ... > t-variables.
enum class Alphabet : std::uint8_t { X = 0, Y = 1, Q = 2, T = 3 };

struct VarId {
  Alphabet alph;
  std::uint32_t index;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId var_x(std::uint32_t i) { return {Alphabet::X, i}; }
inline VarId var_y(std::uint32_t i) { return {Alphabet::Y, i}; }
inline VarId var_q(std::uint32_t i) { return {Alphabet::Q, i}; }
inline VarId var_t(std::uint32_t rank) { return {Alphabet::T, rank}; }

// Grading: deg x = deg y = 1, deg q = 2; t-variables carry no graded degree.
inline int graded_weight(Alphabet a) {
  switch (a) {
    case Alphabet::X:
    case Alphabet::Y:
      return 1;
    case Alphabet::Q:
      return 2;
    case Alphabet::T:
      return 0;
  }
  return 0;
}

// Name without permutation context; t-variables print their rank.
inline std::string var_basic_name(VarId v) {
  switch (v.alph) {
    case Alphabet::X:
      return "x" + std::to_string(v.index);
    case Alphabet::Y:
      return "y" + std::to_string(v.index);
    case Alphabet::Q:
      return "q" + std::to_string(v.index);
    case Alphabet::T:
      return "t#" + std::to_string(v.index);
  }
  return "?";
}

}  // namespace qsc
