#pragma once

#include <span>
#include <variant>
#include <vector>

#include "crp/word.hpp"

namespace crp {

enum class LeviSide { FirstLonger, SecondLonger, Equal };

// FirstLonger: u1 = v1 p, v2 = p u2.  SecondLonger: v1 = u1 p, u2 = p v2.
struct LeviSolution {
  LeviSide side;
  Word p;
};

// Requires u1 u2 == v1 v2 literally.
LeviSolution levi_split(const Word& u1, const Word& u2, const Word& v1, const Word& v2);

// bars_in_u[i] counts the inner boundaries of the v factorization that fall in u_i,
// and symmetrically. A bar at position q belongs to the first nonempty part with
// start <= q < end; a bar at the very end belongs to the last nonempty part.
struct BarPlacement {
  std::vector<std::size_t> bars_in_u;
  std::vector<std::size_t> bars_in_v;
  std::vector<Word> fragments;
};

BarPlacement align_factorizations(std::span<const Word> u_parts, std::span<const Word> v_parts);

// u = u_left a, v = a^-1 v_right, rho(uv) = u_left v_right.
struct Cancellation {
  Word u_left;
  Word a;
  Word v_right;
};

Cancellation max_cancellation(const Word& u, const Word& v);

// u = u1 a, v = a^-1 s (u*v) s^-1 u1^-1
struct ShirvCase1 {
  Word u1, a, s;
};
// u = t c1 a, v = a^-1 c2 t^-1, u*v = c1 c2, c1 and c2 nonempty
struct ShirvCase2 {
  Word c1, c2, t, a;
};
// u = v1^-1 s (u*v) s^-1 a, v = a^-1 v1
struct ShirvCase3 {
  Word v1, s, a;
};

using ShirvCase = std::variant<ShirvCase1, ShirvCase2, ShirvCase3>;

// Requires u, v reduced and u != v^-1. Overlapping templates resolve as Case2, Case1, Case3.
ShirvCase shirv_decompose(const Word& u, const Word& v);

// The literal words a case asserts for u, v and rho(uv).
struct ShirvAssembly {
  Word u, v, uv;
};
ShirvAssembly assemble(const ShirvCase& c, const Word& product);

}  // namespace crp
