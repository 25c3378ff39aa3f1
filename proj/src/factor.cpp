#include <algorithm>
#include <random>
#include <stdexcept>

#include "ternary/field.hpp"
#include "ternary/poly.hpp"

namespace ternary {

std::vector<std::pair<TritPoly, unsigned>> squarefree_decomposition(const TritPoly& f) {
  std::vector<std::pair<TritPoly, unsigned>> out;
  const TritPoly g = monic(f);
  if (g.degree() < 1) return out;

  auto push_cubed = [&out](const TritPoly& c) {
    for (auto& [p, k] : squarefree_decomposition(cube_root(c))) out.emplace_back(std::move(p), 3 * k);
  };

  const TritPoly dg = derivative(g);
  if (dg.is_zero()) {
    push_cubed(g);
    return out;
  }
  TritPoly c = gcd(g, dg);
  TritPoly w = g / c;
  for (unsigned i = 1; !w.is_one(); ++i) {
    TritPoly y = gcd(w, c);
    TritPoly z = w / y;
    if (!z.is_one()) out.emplace_back(std::move(z), i);
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) push_cubed(c);
  return out;
}

std::vector<std::pair<int, TritPoly>> distinct_degree_split(const TritPoly& f) {
  std::vector<std::pair<int, TritPoly>> out;
  TritPoly rest = monic(f);
  const TritPoly x = TritPoly::x();
  TritPoly h = x % rest;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = frobenius(h) % rest;
    TritPoly g = gcd(rest, h - x);
    if (!g.is_one()) {
      rest = rest / g;
      h = h % rest;
      out.emplace_back(d, std::move(g));
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.degree(), std::move(rest));
  return out;
}

namespace {

// Splits a monic squarefree product of irreducibles of degree d.
void equal_degree_split(const TritPoly& f, int d, std::mt19937_64& rng, std::vector<TritPoly>& out) {
  const int n = f.degree();
  if (n == d) {
    out.push_back(f);
    return;
  }
  for (;;) {
    std::vector<Trit> r(static_cast<std::size_t>(n));
    for (auto& t : r) t = static_cast<Trit>(rng() % 3);
    TritPoly a(std::move(r));
    if (a.degree() < 1) continue;
    // a^((3^d - 1)/2) = a * a^3 * ... * a^(3^(d-1))
    TritPoly acc = a % f;
    TritPoly cur = acc;
    for (int j = 1; j < d; ++j) {
      cur = frobenius(cur) % f;
      acc = (acc * cur) % f;
    }
    TritPoly g = gcd(acc - TritPoly::constant(1), f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const TritPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw PolyError("factor: zero polynomial");
  Factorization out;
  out.unit = f.lead();
  out.seed = seed;
  std::mt19937_64 rng(seed);
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    for (auto& [d, block] : distinct_degree_split(part)) {
      std::vector<TritPoly> irr;
      equal_degree_split(block, d, rng, irr);
      for (auto& p : irr) out.factors.emplace_back(std::move(p), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

ExtRoots distinct_roots_in_ext(const TritPoly& f, unsigned m, const FieldCtx* ctx) {
  if (f.is_zero()) throw PolyError("distinct_roots_in_ext: zero polynomial");
  if (m == 0) throw PolyError("distinct_roots_in_ext: m must be positive");
  ExtRoots res;
  res.m = m;
  const TritPoly g = monic(f);
  if (g.degree() >= 1) {
    // The factors with degree dividing m are exactly those of
    // gcd(g, x^(3^m) - x), which is squarefree.
    TritPoly split = gcd(g, x_pow_3k_mod(m, g) - TritPoly::x());
    res.distinct = static_cast<std::uint64_t>(std::max(split.degree(), 0));
    if (split.degree() > 0) {
      Factorization fs = factor(split);
      for (auto& [p, one] : fs.factors) {
        unsigned k = 0;
        TritPoly rest = g;
        for (;;) {
          DivMod qr = divmod(rest, p);
          if (!qr.remainder.is_zero()) break;
          rest = std::move(qr.quotient);
          ++k;
        }
        res.with_multiplicity += static_cast<std::uint64_t>(p.degree()) * k;
        res.factors.emplace_back(p, k);
      }
    }
  }

  if (ctx && ctx->has_tables() && ctx->m() == m) {
    std::vector<std::uint64_t> logs;
    res.zero_is_root = f.coeff(0) == 0;
    for (u64 i = 0; i < ctx->order(); ++i) {
      if (ctx->eval(f, ctx->exp(i)).is_zero()) logs.push_back(i);
    }
    const std::uint64_t swept = logs.size() + (res.zero_is_root ? 1 : 0);
    if (swept != res.distinct) {
      throw std::logic_error("distinct_roots_in_ext: factor count " + std::to_string(res.distinct) +
                             " disagrees with evaluation sweep " + std::to_string(swept));
    }
    res.root_logs = std::move(logs);
  }
  return res;
}

}  // namespace ternary
