#pragma once

// 3-cyclotomic cosets modulo 3^m - 1 and minimal polynomials of alpha^i.

#include <vector>

#include "ternary/field.hpp"

namespace ternary {

struct Coset {
  u64 rep = 0;               // smallest member
  std::vector<u64> members;  // sorted ascending
  unsigned size() const { return static_cast<unsigned>(members.size()); }
};

/// Orbit of i under multiplication by 3 modulo 3^m - 1. Throws
/// std::out_of_range unless 0 <= i <= 3^m - 2.
Coset coset(u64 i, unsigned m);

/// Size of the coset of i without materializing it.
unsigned coset_size(u64 i, unsigned m);

/// True iff e is congruent to a power of 3 modulo 3^m - 1.
bool in_c1(u64 e, unsigned m);

/// Minimal polynomial of alpha^i over GF(3), expanded as the product of
/// (x - alpha^j) over the coset of i. Throws std::logic_error if any
/// coefficient of the product falls outside GF(3).
TritPoly min_poly(u64 i, const FieldCtx& ctx);

}  // namespace ternary
