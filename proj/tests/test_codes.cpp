#include <numeric>
#include <random>

#include "doctest.h"
#include "ternary/codes.hpp"
#include "ternary/cosets.hpp"

using namespace ternary;

namespace {

using u128 = unsigned __int128;

// Sphere-packing ceiling by direct search in 128-bit arithmetic (n small).
u64 bound_oracle(u64 n, u64 k) {
  u128 cap = 1;
  for (u64 i = 0; i < n - k; ++i) cap *= 3;
  u64 best = 1;
  for (u64 d = 1; d <= n; ++d) {
    const u64 t = (d - 1) / 2;
    u128 sum = 0, binom = 1, p2 = 1;
    for (u64 i = 0; i <= t; ++i) {
      if (i > 0) {
        binom = binom * (n - i + 1) / i;
        p2 *= 2;
      }
      sum += binom * p2;
    }
    if (sum <= cap) best = d;
  }
  return best;
}

// Both parity checks evaluated directly in the field.
bool in_code(const FieldCtx& ctx, u64 e, const Codeword& c) {
  FieldElem s1 = ctx.zero(), se = ctx.zero();
  for (auto [pos, a] : c.terms) {
    const FieldElem coef = ctx.from_trit(a);
    s1 = ctx.add(s1, ctx.mul(coef, ctx.exp(pos % ctx.order())));
    se = ctx.add(se, ctx.mul(coef, ctx.exp(mulmod(pos, e, ctx.order()))));
  }
  return s1.is_zero() && se.is_zero();
}

}  // namespace

TEST_CASE("build_code examples") {
  const CodeSpec s = build_code(3, 10);
  CHECK(s.n == 26);
  CHECK(s.k == 20);
  CHECK(s.g.degree() == 6);
  CHECK_FALSE(s.warning);
  CHECK_THROWS_AS(build_code(3, 3), CodeError);
  CHECK_THROWS_AS(build_code(3, 1), CodeError);

  // |C_13| = 1 in m = 3: the code is built but flagged.
  const CodeSpec w = build_code(3, 13);
  CHECK(w.k == 26 - 4);
  CHECK(w.warning);
}

TEST_CASE("generator divides x^n - 1 and has degree l_1 + l_e") {
  for (unsigned m = 2; m <= 6; ++m) {
    const FieldCtx ctx = build_field(m);
    const u64 n = ctx.order();
    const TritPoly xn1 = TritPoly::monomial(n) - TritPoly::constant(1);
    for (u64 e = 0; e < n; e += (m <= 4 ? 1 : 13)) {
      if (in_c1(e, m)) continue;
      const CodeSpec s = build_code(ctx, e);
      CHECK(divmod(xn1, s.g).remainder.is_zero());
      CHECK(s.g.degree() == static_cast<int>(m + coset_size(e, m)));
      CHECK(s.k == n - static_cast<u64>(s.g.degree()));
    }
  }
}

TEST_CASE("certify examples") {
  const CertifyReport a = certify_optimal(3, 10);
  CHECK(a.optimal);
  CHECK(a.spec.d_lower == 4);
  CHECK(a.bound_d == 4);
  CHECK_FALSE(a.witness);

  const CertifyReport b = certify_optimal(5, 122);
  CHECK_FALSE(b.optimal);
  REQUIRE(b.witness);
  CHECK(b.witness->weight() <= 3);
  CHECK(b.routes_agree);

  const CertifyReport c = certify_optimal(5, 44);
  CHECK(c.optimal);
  const auto j = certify_json(c);
  CHECK(j["n"] == 242);
  CHECK(j["k"] == 232);
  CHECK(j["d_lower"] == 4);
  CHECK(j["d_upper_bound"] == 4);
  CHECK_FALSE(j.contains("witness"));
  CHECK(certify_json(b).contains("witness"));
}

TEST_CASE("witnesses vanish under both parity checks and are divisible by g") {
  for (unsigned m = 2; m <= 5; ++m) {
    const FieldCtx ctx = build_field(m);
    for (u64 e = 2; e < ctx.order(); e += 2) {
      if (in_c1(e, m)) continue;
      const CodeSpec s = build_code(ctx, e);
      for (unsigned w = 1; w <= 3; ++w) {
        const auto c = has_weight_le(s, ctx, w);
        if (!c) continue;
        CHECK(c->weight() <= w);
        CHECK(c->weight() >= 1);
        CHECK(in_code(ctx, e, *c));
        CHECK((c->as_poly() % s.g).is_zero());
      }
    }
  }
}

TEST_CASE("weight search agrees with brute force on small codes") {
  // m = 2: n = 8, enumerate all weight <= 3 words.
  const FieldCtx ctx = build_field(2);
  const u64 n = ctx.order();
  for (u64 e = 0; e < n; ++e) {
    if (in_c1(e, 2)) continue;
    const CodeSpec s = build_code(ctx, e);
    unsigned min_w = 99;
    for (u64 mask = 1; mask < pow3(n); ++mask) {
      Codeword c;
      u64 v = mask;
      for (u64 p = 0; p < n; ++p, v /= 3) {
        if (v % 3) c.terms.emplace_back(p, static_cast<Trit>(v % 3));
      }
      if (c.weight() >= min_w || c.weight() > 3) continue;
      if ((c.as_poly() % s.g).is_zero()) min_w = static_cast<unsigned>(c.weight());
    }
    for (unsigned w = 1; w <= 3; ++w) CHECK(has_weight_le(s, ctx, w).has_value() == (min_w <= w));
  }
}

TEST_CASE("route equivalence for m <= 7") {
  for (unsigned m = 2; m <= 7; ++m) {
    const FieldCtx ctx = build_field(m);
    const u64 n = ctx.order();
    // m = 7 is sampled; smaller m are exhaustive.
    const u64 stride = m <= 6 ? 2 : 38;
    for (u64 e = 2; e < n; e += stride) {
      if (in_c1(e, m) || coset_size(e, m) != m) continue;
      const CertifyReport r = certify_optimal(ctx, e);
      CHECK(r.routes_agree);
      CHECK(r.optimal == classify(ctx, e).optimal);
    }
  }
  for (u64 e : {1094ull, 1590ull, 608ull}) {
    CHECK(certify_optimal(7, e).optimal == classify(7, e).optimal);
  }
}

TEST_CASE("sphere packing bound") {
  CHECK(sphere_packing_max_d(26, 20).d == 4);
  CHECK(sphere_packing_max_d(242, 232).d == 4);
  const BoundResult full = sphere_packing_max_d(10, 10);
  CHECK(full.degenerate);
  CHECK(full.d == 10);
  CHECK_THROWS(sphere_packing_max_d(5, 6));

  for (u64 n = 1; n <= 40; ++n) {
    u64 prev = n + 1;
    for (u64 k = 0; k < n; ++k) {
      const u64 d = sphere_packing_max_d(n, k).d;
      CHECK(d == bound_oracle(n, k));
      CHECK(d <= prev);
      prev = d;
    }
  }
  for (unsigned m = 3; m <= 13; ++m) {
    const u64 n = pow3(m) - 1;
    CHECK(sphere_packing_max_d(n, n - 2 * m).d == 4);
  }
}
