#include "ternary/cosets.hpp"

#include <algorithm>
#include <string>

namespace ternary {

namespace {

u64 modulus_of(unsigned m) {
  if (m < 1 || m > kMaxFieldDegree) throw std::out_of_range("m out of range [1, 40]");
  return pow3(m) - 1;
}

void check_range(u64 i, unsigned m) {
  const u64 n = modulus_of(m);
  // GF(3) has n = 2 and indices {0, 1}.
  if (i >= n) throw std::out_of_range("index " + std::to_string(i) + " out of range [0, 3^m-2]");
}

}  // namespace

Coset coset(u64 i, unsigned m) {
  check_range(i, m);
  const u64 n = modulus_of(m);
  Coset c;
  u64 j = i;
  do {
    c.members.push_back(j);
    j = mulmod(j, 3, n);
  } while (j != i);
  std::sort(c.members.begin(), c.members.end());
  c.rep = c.members.front();
  return c;
}

unsigned coset_size(u64 i, unsigned m) {
  check_range(i, m);
  const u64 n = modulus_of(m);
  unsigned s = 1;
  for (u64 j = mulmod(i, 3, n); j != i; j = mulmod(j, 3, n)) ++s;
  return s;
}

bool in_c1(u64 e, unsigned m) {
  check_range(e, m);
  const u64 n = modulus_of(m);
  u64 p = 1 % n;
  for (unsigned s = 0; s < m; ++s, p = mulmod(p, 3, n)) {
    if (p == e) return true;
  }
  return false;
}

TritPoly min_poly(u64 i, const FieldCtx& ctx) {
  const Coset c = coset(i, ctx.m());
  // prod starts as the constant 1; coefficients lowest degree first.
  std::vector<FieldElem> prod{ctx.one()};
  for (u64 j : c.members) {
    const FieldElem root = ctx.neg(ctx.exp(j));
    std::vector<FieldElem> next(prod.size() + 1, ctx.zero());
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] = ctx.add(next[k + 1], prod[k]);
      next[k] = ctx.add(next[k], ctx.mul(prod[k], root));
    }
    prod = std::move(next);
  }
  std::vector<Trit> out(prod.size());
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (!ctx.in_base_field(prod[k])) {
      throw std::logic_error("min_poly: coefficient of x^" + std::to_string(k) + " is not in GF(3)");
    }
    out[k] = prod[k].coeff(0);
  }
  return TritPoly(std::move(out));
}

}  // namespace ternary
