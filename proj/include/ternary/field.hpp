#pragma once

// GF(3^m) for 1 <= m <= 40.
//
// Elements are stored in the polynomial basis modulo the field modulus, one
// bitplane for the coefficients equal to 1 and one for those equal to 2.
// For q = 3^m <= 3^13 the context also carries discrete-log, antilog and
// Zech tables so that exhaustive sweeps run entirely in the log domain.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ternary/numtheory.hpp"
#include "ternary/poly.hpp"

namespace ternary {

struct FieldElem {
  u64 ones = 0;  // bit i set: coefficient of x^i is 1
  u64 twos = 0;  // bit i set: coefficient of x^i is 2

  bool is_zero() const { return (ones | twos) == 0; }
  Trit coeff(unsigned i) const {
    return static_cast<Trit>(((ones >> i) & 1) | (((twos >> i) & 1) << 1));
  }
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Largest m for which log/Zech tables are materialized.
inline constexpr unsigned kMaxTableDegree = 13;
inline constexpr unsigned kMaxFieldDegree = 40;

class FieldCtx {
 public:
  /// Log-domain encoding of zero.
  static constexpr u64 kZeroLog = ~u64{0};

  unsigned m() const { return m_; }
  u64 q() const { return q_; }
  /// Order of the multiplicative group, q - 1.
  u64 order() const { return q_ - 1; }
  const TritPoly& modulus() const { return modulus_; }
  FieldElem alpha() const { return alpha_; }
  bool has_tables() const { return tables_ != nullptr; }

  FieldElem zero() const { return {}; }
  FieldElem one() const { return from_trit(1); }
  FieldElem from_trit(Trit t) const;
  /// Reduces p modulo the field modulus.
  FieldElem from_poly(const TritPoly& p) const;
  TritPoly to_poly(const FieldElem& a) const;
  /// Base-3 integer sum c_i 3^i, a bijection onto [0, q).
  u64 index(const FieldElem& a) const;
  FieldElem from_index(u64 idx) const;
  /// True for elements of the prime field GF(3).
  bool in_base_field(const FieldElem& a) const { return ((a.ones | a.twos) >> 1) == 0; }

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }
  FieldElem neg(const FieldElem& a) const { return {a.twos, a.ones}; }
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  /// Throws FieldError on zero.
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, u64 k) const;
  /// Negative k is the inverse power; zero to a negative power throws.
  FieldElem pow_signed(const FieldElem& a, std::int64_t k) const;

  /// t^((q-1)/2) == 1. Throws on zero.
  bool is_square(const FieldElem& t) const;
  /// The unique beta with beta^n = t; requires gcd(n, q-1) = 1 and t != 0.
  FieldElem nth_root_coprime(const FieldElem& t, u64 n) const;

  /// Evaluates p at a (Horner).
  FieldElem eval(const TritPoly& p, const FieldElem& a) const;

  /// alpha^i.
  FieldElem exp(u64 i) const;
  /// Discrete log base alpha; requires tables and a nonzero argument.
  u64 log(const FieldElem& a) const;

  // Log-domain helpers. All require tables; kZeroLog encodes zero.
  u64 zech(u64 i) const {  // log(alpha^i + 1), kZeroLog at i = (q-1)/2
    return tables_->zech[i] == kNoEntry ? kZeroLog : tables_->zech[i];
  }
  u64 log_neg(u64 a) const {
    if (a == kZeroLog) return a;
    u64 r = a + half_;
    return r >= order() ? r - order() : r;
  }
  u64 log_mul(u64 a, u64 b) const {
    if (a == kZeroLog || b == kZeroLog) return kZeroLog;
    u64 r = a + b;
    return r >= order() ? r - order() : r;
  }
  u64 log_add(u64 a, u64 b) const {
    if (a == kZeroLog) return b;
    if (b == kZeroLog) return a;
    u64 d = b >= a ? b - a : b + order() - a;
    return log_mul(a, zech(d));
  }
  /// (alpha^a)^e with 0^0 = 1.
  u64 log_pow(u64 a, u64 e) const {
    if (a == kZeroLog) return e == 0 ? 0 : kZeroLog;
    return mulmod(a, e % order(), order());
  }
  /// log of an element given by index (kZeroLog for 0).
  u64 log_of_index(u64 idx) const {
    std::uint32_t v = tables_->log[idx];
    return v == kNoEntry ? kZeroLog : v;
  }
  u64 index_of_log(u64 i) const { return tables_->exp[i]; }

  friend FieldCtx build_field(unsigned m, std::optional<TritPoly> modulus);

 private:
  static constexpr std::uint32_t kNoEntry = ~std::uint32_t{0};

  struct Tables {
    std::vector<std::uint32_t> exp;   // i -> index(alpha^i)
    std::vector<std::uint32_t> log;   // index -> i
    std::vector<std::uint32_t> zech;  // i -> log(alpha^i + 1)
  };

  FieldCtx() = default;
  FieldElem mul_x(const FieldElem& a) const;
  bool has_full_order(const FieldElem& a) const;
  void build_tables();

  unsigned m_ = 0;
  u64 q_ = 0;
  u64 half_ = 0;
  u64 mask_ = 0;
  TritPoly modulus_;
  FieldElem low_{};      // modulus minus x^m
  FieldElem low_neg_{};  // its negation
  FieldElem alpha_{};
  std::vector<u64> order_primes_;
  std::shared_ptr<const Tables> tables_;
};

/// Builds GF(3^m). Without a modulus, uses the lexicographically smallest
/// monic irreducible of degree m (coefficients compared from x^0 upward);
/// alpha is the primitive element with the smallest index. For m = 1 the
/// modulus is x and alpha = 2. Tables are built iff m <= kMaxTableDegree.
FieldCtx build_field(unsigned m, std::optional<TritPoly> modulus = std::nullopt);

/// The default modulus build_field would choose.
TritPoly default_modulus(unsigned m);

}  // namespace ternary
