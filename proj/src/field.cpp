#include "ternary/field.hpp"

#include <string>

namespace ternary {

namespace {

FieldElem plane_add(const FieldElem& a, const FieldElem& b, u64 mask) {
  const u64 a0 = ~(a.ones | a.twos) & mask;
  const u64 b0 = ~(b.ones | b.twos) & mask;
  return {(a0 & b.ones) | (a.ones & b0) | (a.twos & b.twos),
          (a0 & b.twos) | (a.twos & b0) | (a.ones & b.ones)};
}

}  // namespace

FieldElem FieldCtx::from_trit(Trit t) const {
  t = static_cast<Trit>(t % 3);
  return {t == 1 ? u64{1} : u64{0}, t == 2 ? u64{1} : u64{0}};
}

FieldElem FieldCtx::from_poly(const TritPoly& p) const {
  TritPoly r = p % modulus_;
  FieldElem e;
  for (int i = 0; i <= r.degree(); ++i) {
    Trit c = r.coeff(static_cast<std::size_t>(i));
    if (c == 1) e.ones |= u64{1} << i;
    if (c == 2) e.twos |= u64{1} << i;
  }
  return e;
}

TritPoly FieldCtx::to_poly(const FieldElem& a) const {
  std::vector<Trit> c(m_);
  for (unsigned i = 0; i < m_; ++i) c[i] = a.coeff(i);
  return TritPoly(std::move(c));
}

u64 FieldCtx::index(const FieldElem& a) const {
  u64 idx = 0;
  for (unsigned i = m_; i-- > 0;) idx = idx * 3 + a.coeff(i);
  return idx;
}

FieldElem FieldCtx::from_index(u64 idx) const {
  if (idx >= q_) throw FieldError("element index out of range");
  FieldElem e;
  for (unsigned i = 0; i < m_; ++i, idx /= 3) {
    u64 d = idx % 3;
    if (d == 1) e.ones |= u64{1} << i;
    if (d == 2) e.twos |= u64{1} << i;
  }
  return e;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const { return plane_add(a, b, mask_); }

FieldElem FieldCtx::mul_x(const FieldElem& a) const {
  FieldElem s{(a.ones << 1) & mask_, (a.twos << 1) & mask_};
  const Trit top = a.coeff(m_ - 1);
  // x^m = -(modulus - x^m)
  if (top == 1) s = plane_add(s, low_neg_, mask_);
  if (top == 2) s = plane_add(s, low_, mask_);
  return s;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  if (tables_ && !a.is_zero() && !b.is_zero()) {
    return from_index(tables_->exp[log_mul(log(a), log(b))]);
  }
  FieldElem acc;
  const FieldElem na = neg(a);
  for (unsigned i = m_; i-- > 0;) {
    acc = mul_x(acc);
    Trit c = b.coeff(i);
    if (c == 1) acc = plane_add(acc, a, mask_);
    if (c == 2) acc = plane_add(acc, na, mask_);
  }
  return acc;
}

FieldElem FieldCtx::pow(const FieldElem& a, u64 k) const {
  if (k == 0) return one();
  if (a.is_zero()) return zero();
  k %= order();
  if (tables_) return exp(mulmod(log(a), k, order()));
  FieldElem result = one();
  FieldElem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  if (a.is_zero()) throw FieldError("inverse of zero");
  return pow(a, order() - 1);
}

FieldElem FieldCtx::pow_signed(const FieldElem& a, std::int64_t k) const {
  if (k >= 0) return pow(a, static_cast<u64>(k));
  if (a.is_zero()) throw FieldError("zero raised to a negative power");
  u64 mag = static_cast<u64>(-(k + 1)) + 1;
  return inv(pow(a, mag));
}

bool FieldCtx::is_square(const FieldElem& t) const {
  if (t.is_zero()) throw FieldError("is_square: zero argument");
  return pow(t, order() / 2) == one();
}

FieldElem FieldCtx::nth_root_coprime(const FieldElem& t, u64 n) const {
  if (t.is_zero()) throw FieldError("nth_root_coprime: zero argument");
  if (n == 0 || gcd(n, order()) != 1) {
    throw FieldError("nth_root_coprime: gcd(n, q-1) != 1");
  }
  return pow(t, invmod(n % order(), order()));
}

FieldElem FieldCtx::eval(const TritPoly& p, const FieldElem& a) const {
  FieldElem acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = add(mul(acc, a), from_trit(p.coeff(static_cast<std::size_t>(i))));
  }
  return acc;
}

FieldElem FieldCtx::exp(u64 i) const {
  i %= order();
  if (tables_) return from_index(tables_->exp[i]);
  return pow(alpha_, i);
}

u64 FieldCtx::log(const FieldElem& a) const {
  if (!tables_) throw FieldError("discrete log requires table-backed field");
  if (a.is_zero()) throw FieldError("log of zero");
  return tables_->log[index(a)];
}

bool FieldCtx::has_full_order(const FieldElem& a) const {
  if (a.is_zero()) return false;
  for (u64 r : order_primes_) {
    if (pow(a, order() / r) == one()) return false;
  }
  return true;
}

void FieldCtx::build_tables() {
  auto t = std::make_shared<Tables>();
  const u64 n = order();
  t->exp.resize(n);
  t->log.assign(q_, kNoEntry);
  FieldElem cur = one();
  for (u64 i = 0; i < n; ++i) {
    const u64 idx = index(cur);
    t->exp[i] = static_cast<std::uint32_t>(idx);
    t->log[idx] = static_cast<std::uint32_t>(i);
    cur = mul(cur, alpha_);
  }
  t->zech.resize(n);
  for (u64 i = 0; i < n; ++i) {
    // Adding 1 only touches the constant trit of the index.
    u64 idx = t->exp[i];
    u64 c0 = idx % 3;
    u64 plus_one = idx - c0 + (c0 + 1) % 3;
    t->zech[i] = t->log[plus_one];
  }
  tables_ = std::move(t);
}

TritPoly default_modulus(unsigned m) {
  if (m < 1 || m > kMaxFieldDegree) throw FieldError("field degree out of range [1, 40]");
  if (m == 1) return TritPoly::x();
  // Candidates ordered lexicographically on (c_0, c_1, ..., c_{m-1}).
  // c_0 is the most significant digit and must be nonzero.
  const u64 count = pow3(m);
  for (u64 k = pow3(m - 1); k < count; ++k) {
    std::vector<Trit> c(m + 1, 0);
    u64 v = k;
    for (unsigned i = m; i-- > 0; v /= 3) c[i] = static_cast<Trit>(v % 3);
    c[m] = 1;
    TritPoly cand(std::move(c));
    if (is_irreducible(cand)) return cand;
  }
  throw FieldError("no irreducible polynomial found");  // unreachable
}

FieldCtx build_field(unsigned m, std::optional<TritPoly> modulus) {
  if (m < 1 || m > kMaxFieldDegree) throw FieldError("field degree out of range [1, 40]");
  FieldCtx ctx;
  ctx.m_ = m;
  ctx.q_ = pow3(m);
  ctx.half_ = (ctx.q_ - 1) / 2;
  ctx.mask_ = (u64{1} << m) - 1;
  if (modulus) {
    if (modulus->degree() != static_cast<int>(m) || !modulus->is_monic()) {
      throw FieldError("modulus must be monic of degree " + std::to_string(m));
    }
    if (!is_irreducible(*modulus)) throw FieldError("modulus is reducible over GF(3)");
    ctx.modulus_ = *modulus;
  } else {
    ctx.modulus_ = default_modulus(m);
  }
  for (unsigned i = 0; i < m; ++i) {
    Trit c = ctx.modulus_.coeff(i);
    if (c == 1) ctx.low_.ones |= u64{1} << i;
    if (c == 2) ctx.low_.twos |= u64{1} << i;
  }
  ctx.low_neg_ = ctx.neg(ctx.low_);
  ctx.order_primes_ = ctx.order() > 1 ? prime_divisors(ctx.order()) : std::vector<u64>{};
  for (u64 idx = 1; idx < ctx.q_; ++idx) {
    FieldElem cand = ctx.from_index(idx);
    if (ctx.has_full_order(cand)) {
      ctx.alpha_ = cand;
      break;
    }
  }
  if (m <= kMaxTableDegree) ctx.build_tables();
  return ctx;
}

}  // namespace ternary
