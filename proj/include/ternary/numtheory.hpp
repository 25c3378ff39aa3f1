#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ternary {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 n) {
  return static_cast<u64>(static_cast<u128>(a) * b % n);
}

u64 powmod(u64 base, u64 exp, u64 n);

u64 gcd(u64 a, u64 b);

/// Inverse of a modulo n. Throws std::domain_error when gcd(a, n) != 1.
u64 invmod(u64 a, u64 n);

/// 3^k, checked against overflow of 64 bits.
u64 pow3(unsigned k);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
/// Trial division up to 10^6, then Pollard rho (Brent) on the cofactor.
std::vector<std::pair<u64, unsigned>> factor_integer(u64 n);

/// Distinct prime divisors of n, ascending.
std::vector<u64> prime_divisors(u64 n);

}  // namespace ternary
