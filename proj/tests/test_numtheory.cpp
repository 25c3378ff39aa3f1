#include <stdexcept>

#include "doctest.h"
#include "ternary/numtheory.hpp"

using namespace ternary;

TEST_CASE("factor_integer reproduces the input") {
  CHECK(factor_integer(242) == std::vector<std::pair<u64, unsigned>>{{2, 1}, {11, 2}});
  CHECK(factor_integer(2186) == std::vector<std::pair<u64, unsigned>>{{2, 1}, {1093, 1}});
  for (unsigned m = 1; m <= 40; ++m) {
    const u64 n = pow3(m) - 1;
    u64 prod = 1;
    for (auto [p, e] : factor_integer(n)) {
      CHECK(is_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("is_prime against trial division") {
  for (u64 n = 0; n < 5000; ++n) {
    bool trial = n >= 2;
    for (u64 d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        trial = false;
        break;
      }
    }
    CHECK(is_prime(n) == trial);
  }
}

TEST_CASE("invmod") {
  CHECK(invmod(11, 2186) == 795);
  CHECK(11 * 795 - 4 * 2186 == 1);
  CHECK_THROWS_AS(invmod(11, 242), std::domain_error);
  CHECK_THROWS_AS(pow3(41), std::overflow_error);
}
