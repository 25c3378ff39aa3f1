#include <numeric>
#include <set>

#include "doctest.h"
#include "ternary/cosets.hpp"

using namespace ternary;

TEST_CASE("coset examples") {
  CHECK(coset(1, 3).members == std::vector<u64>{1, 3, 9});
  CHECK(coset(1, 3).size() == 3);
  CHECK(coset(0, 4).members == std::vector<u64>{0});
  CHECK(coset(122, 5).size() == 5);
  CHECK(std::gcd(u64{122}, u64{242}) == 2);
  CHECK(coset(13, 3).members == std::vector<u64>{13});  // 13 * 3 = 39 = 13 mod 26
  CHECK(coset(4, 2).rep == 4);
  CHECK_THROWS_AS(coset(26, 3), std::out_of_range);
}

TEST_CASE("in_c1") {
  CHECK(in_c1(9, 3));
  CHECK(in_c1(1, 3));
  CHECK_FALSE(in_c1(122, 5));
  CHECK_FALSE(in_c1(2, 3));
  // Enumerated powers of 3 as the oracle.
  for (unsigned m = 1; m <= 6; ++m) {
    const u64 n = pow3(m) - 1;
    std::set<u64> c1;
    for (u64 p = 1 % n, s = 0; s < m; ++s, p = p * 3 % n) c1.insert(p);
    for (u64 e = 0; e < n; ++e) CHECK(in_c1(e, m) == (c1.count(e) == 1));
  }
}

TEST_CASE("cosets partition Z/(3^m-1) and their sizes divide m") {
  for (unsigned m = 1; m <= 10; ++m) {
    const u64 n = pow3(m) - 1;
    std::vector<char> seen(n, 0);
    u64 total = 0;
    for (u64 i = 0; i < n; ++i) {
      if (seen[i]) continue;
      const Coset c = coset(i, m);
      CHECK(c.rep == i);
      CHECK(m % c.size() == 0);
      CHECK(coset_size(i, m) == c.size());
      // minimal period: 3^l i = i
      CHECK(mulmod(powmod(3, c.size(), n), i, n) == i);
      for (u64 j : c.members) {
        CHECK_FALSE(seen[j]);
        seen[j] = 1;
      }
      total += c.size();
    }
    CHECK(total == n);
  }
}

TEST_CASE("gcd(e, 3^m-1) = 2 forces |C_e| = m") {
  for (unsigned m : {3u, 5u, 7u}) {
    const u64 n = pow3(m) - 1;
    for (u64 e = 0; e < n; e += 2) {
      if (std::gcd(e, n) == 2) CHECK(coset_size(e, m) == m);
    }
  }
}

TEST_CASE("min_poly") {
  const FieldCtx f5 = build_field(5);
  CHECK(min_poly(0, f5) == parse_poly("x-1"));
  const TritPoly m1 = min_poly(1, f5);
  CHECK(f5.eval(m1, f5.alpha()).is_zero());
  if (f5.alpha() == f5.from_poly(TritPoly::x())) CHECK(m1 == f5.modulus());
  CHECK(min_poly(122, f5).degree() == 5);

  for (unsigned m = 2; m <= 7; ++m) {
    const FieldCtx ctx = build_field(m);
    const u64 n = ctx.order();
    // x^n - 1 written out explicitly.
    const TritPoly xn1 = TritPoly::monomial(n) - TritPoly::constant(1);
    std::vector<std::pair<u64, TritPoly>> reps;
    const u64 stride = m <= 4 ? 1 : 37;
    for (u64 i = 0; i < n; i += stride) {
      const TritPoly p = min_poly(i, ctx);
      CHECK(p.is_monic());
      CHECK(p.degree() == static_cast<int>(coset_size(i, m)));
      CHECK(is_irreducible(p));
      CHECK((xn1 % p).is_zero());
      CHECK(ctx.eval(p, ctx.exp(i)).is_zero());
      reps.emplace_back(coset(i, m).rep, p);
    }
    for (std::size_t a = 0; a < reps.size(); a += 3) {
      for (std::size_t b = 0; b < reps.size(); b += 5) {
        CHECK((reps[a].second == reps[b].second) == (reps[a].first == reps[b].first));
      }
    }
  }
}
