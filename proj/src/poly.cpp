#include "ternary/poly.hpp"

#include <algorithm>

#include "ternary/numtheory.hpp"

namespace ternary {

namespace {

// dst[shift + i] += src[i] (mod 3); dst must be long enough.
inline void add_shifted(Trit* dst, const Trit* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    unsigned v = dst[i] + src[i];
    dst[i] = static_cast<Trit>(v >= 3 ? v - 3 : v);
  }
}

std::vector<Trit> negated(std::span<const Trit> a) {
  std::vector<Trit> out(a.begin(), a.end());
  for (auto& t : out) t = trit_neg(t);
  return out;
}

// In-place remainder of r modulo g (g nonzero); optionally collects the
// quotient.
void reduce(std::vector<Trit>& r, const TritPoly& g, std::vector<Trit>* quotient) {
  const int dg = g.degree();
  const Trit inv_lead = g.lead();  // 1*1 = 2*2 = 1 in GF(3)
  auto gc = g.coeffs();
  std::vector<Trit> g_pos(gc.begin(), gc.end());
  std::vector<Trit> g_neg = negated(gc);
  int top = static_cast<int>(r.size()) - 1;
  if (quotient) quotient->assign(top >= dg ? top - dg + 1 : 0, 0);
  for (; top >= dg; --top) {
    Trit c = r[top];
    if (c == 0) continue;
    Trit q = static_cast<Trit>((c * inv_lead) % 3);
    if (quotient) (*quotient)[top - dg] = q;
    // r -= q * x^(top-dg) * g
    const auto& src = (q == 1) ? g_neg : g_pos;
    add_shifted(r.data() + (top - dg), src.data(), static_cast<std::size_t>(dg) + 1);
  }
  r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(std::max(dg, 0))));
}

}  // namespace

TritPoly::TritPoly(std::vector<Trit> coeffs) : c_(std::move(coeffs)) {
  for (auto& t : c_) t = static_cast<Trit>(t % 3);
  trim();
}

TritPoly::TritPoly(std::initializer_list<int> coeffs) {
  c_.reserve(coeffs.size());
  for (int v : coeffs) c_.push_back(trit(v));
  trim();
}

TritPoly TritPoly::constant(long long c) { return TritPoly(std::vector<Trit>{trit(c)}); }

TritPoly TritPoly::monomial(std::size_t k, Trit c) {
  std::vector<Trit> v(k + 1, 0);
  v[k] = c;
  return TritPoly(std::move(v));
}

void TritPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Trit TritPoly::eval(Trit at) const {
  unsigned acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * at + *it) % 3;
  return static_cast<Trit>(acc);
}

TritPoly TritPoly::operator-() const {
  TritPoly r;
  r.c_ = negated(c_);
  return r;
}

TritPoly& TritPoly::operator+=(const TritPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  add_shifted(c_.data(), o.c_.data(), o.c_.size());
  trim();
  return *this;
}

TritPoly& TritPoly::operator-=(const TritPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  auto neg = negated(o.c_);
  add_shifted(c_.data(), neg.data(), neg.size());
  trim();
  return *this;
}

TritPoly& TritPoly::operator*=(Trit s) {
  s = static_cast<Trit>(s % 3);
  if (s == 0) {
    c_.clear();
  } else if (s == 2) {
    for (auto& t : c_) t = trit_neg(t);
  }
  return *this;
}

TritPoly& TritPoly::operator*=(const TritPoly& o) {
  *this = *this * o;
  return *this;
}

TritPoly operator*(const TritPoly& a, const TritPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const TritPoly& small = a.c_.size() <= b.c_.size() ? a : b;
  const TritPoly& big = a.c_.size() <= b.c_.size() ? b : a;
  std::vector<Trit> out(a.c_.size() + b.c_.size() - 1, 0);
  std::vector<Trit> big_neg = negated(big.c_);
  for (std::size_t i = 0; i < small.c_.size(); ++i) {
    Trit s = small.c_[i];
    if (s == 0) continue;
    const auto& src = s == 1 ? big.c_ : big_neg;
    add_shifted(out.data() + i, src.data(), src.size());
  }
  return TritPoly(std::move(out));
}

DivMod divmod(const TritPoly& f, const TritPoly& g) {
  if (g.is_zero()) throw PolyError("division by the zero polynomial");
  std::vector<Trit> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<Trit> q;
  reduce(r, g, &q);
  return {TritPoly(std::move(q)), TritPoly(std::move(r))};
}

TritPoly operator/(const TritPoly& f, const TritPoly& g) { return divmod(f, g).quotient; }

TritPoly operator%(const TritPoly& f, const TritPoly& g) {
  if (g.is_zero()) throw PolyError("division by the zero polynomial");
  std::vector<Trit> r(f.coeffs().begin(), f.coeffs().end());
  reduce(r, g, nullptr);
  return TritPoly(std::move(r));
}

TritPoly monic(const TritPoly& f) { return f.lead() == 2 ? -f : f; }

TritPoly gcd(const TritPoly& f, const TritPoly& g) {
  TritPoly a = f, b = g;
  while (!b.is_zero()) {
    TritPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

TritPoly derivative(const TritPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<Trit> d(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) d[i - 1] = trit(static_cast<long long>(i) * f.coeff(i));
  return TritPoly(std::move(d));
}

TritPoly pow(const TritPoly& f, std::uint64_t k) {
  TritPoly result = TritPoly::constant(1);
  TritPoly base = f;
  while (k) {
    // Cubing is a coefficient spread; use it for the base-3 digits.
    unsigned digit = k % 3;
    for (unsigned i = 0; i < digit; ++i) result *= base;
    k /= 3;
    if (k) base = frobenius(base);
  }
  return result;
}

TritPoly powmod(const TritPoly& f, std::uint64_t k, const TritPoly& modulus) {
  if (modulus.is_zero()) throw PolyError("powmod: zero modulus");
  TritPoly result = TritPoly::constant(1) % modulus;
  TritPoly base = f % modulus;
  while (k) {
    if (k & 1) result = (result * base) % modulus;
    k >>= 1;
    if (k) base = (base * base) % modulus;
  }
  return result;
}

TritPoly frobenius(const TritPoly& f) {
  if (f.is_zero()) return {};
  std::vector<Trit> out(3 * static_cast<std::size_t>(f.degree()) + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[3 * i] = f.coeff(i);
  return TritPoly(std::move(out));
}

TritPoly cube_root(const TritPoly& f) {
  if (f.is_zero()) return {};
  std::vector<Trit> out(static_cast<std::size_t>(f.degree()) / 3 + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i % 3 != 0) {
      if (f.coeff(i) != 0) throw PolyError("cube_root: not a polynomial in x^3");
      continue;
    }
    out[i / 3] = f.coeff(i);
  }
  return TritPoly(std::move(out));
}

TritPoly x_pow_3k_mod(unsigned k, const TritPoly& modulus) {
  TritPoly r = TritPoly::x() % modulus;
  for (unsigned i = 0; i < k; ++i) r = frobenius(r) % modulus;
  return r;
}

TritPoly compose(const TritPoly& p, const TritPoly& q) {
  TritPoly acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * q + TritPoly::constant(p.coeff(static_cast<std::size_t>(i)));
  }
  return acc;
}

bool is_irreducible(const TritPoly& f) {
  if (f.degree() < 1) throw PolyError("is_irreducible: constant polynomial");
  const unsigned d = static_cast<unsigned>(f.degree());
  if (d == 1) return true;
  const TritPoly g = monic(f);
  const TritPoly x = TritPoly::x();
  // Frobenius powers x^(3^i) mod g for i = 0..d.
  std::vector<TritPoly> frob{x % g};
  for (unsigned i = 1; i <= d; ++i) frob.push_back(frobenius(frob.back()) % g);
  if (frob[d] != x % g) return false;
  for (u64 r : prime_divisors(d)) {
    if (!gcd(frob[d / r] - x, g).is_one()) return false;
  }
  return true;
}

bool canonical_less(const TritPoly& a, const TritPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto signed_rank = [](Trit t) { return t == 2 ? -1 : static_cast<int>(t); };
  for (int i = a.degree(); i >= 0; --i) {
    int sa = signed_rank(a.coeff(static_cast<std::size_t>(i)));
    int sb = signed_rank(b.coeff(static_cast<std::size_t>(i)));
    if (sa != sb) return sa < sb;
  }
  return false;
}

TritPoly Factorization::expand() const {
  TritPoly r = TritPoly::constant(unit);
  for (const auto& [p, k] : factors) r *= pow(p, k);
  return r;
}

std::map<int, unsigned> Factorization::degree_multiset() const {
  std::map<int, unsigned> out;
  for (const auto& [p, k] : factors) out[p.degree()] += k;
  return out;
}

RationalMap::RationalMap(TritPoly n, TritPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw PolyError("rational map with zero denominator");
  TritPoly g = gcd(num, den);
  if (num.is_zero()) {
    den = TritPoly::constant(1);
  } else if (!g.is_one()) {
    num = num / g;
    den = den / g;
  }
}

namespace {

// sum_i p_i num^i den^(d - i)
TritPoly homogenize(const TritPoly& p, const TritPoly& num, const TritPoly& den, int d) {
  TritPoly acc;
  // num powers ascending, den powers descending
  std::vector<TritPoly> den_pows{TritPoly::constant(1)};
  for (int i = 1; i <= d; ++i) den_pows.push_back(den_pows.back() * den);
  TritPoly num_pow = TritPoly::constant(1);
  for (int i = 0; i <= p.degree(); ++i) {
    Trit c = p.coeff(static_cast<std::size_t>(i));
    if (c != 0) acc += num_pow * den_pows[static_cast<std::size_t>(d - i)] * c;
    num_pow *= num;
  }
  return acc;
}

}  // namespace

RationalMap substitute_rational(const TritPoly& p, const RationalMap& map) {
  if (p.is_zero()) throw PolyError("substitute_rational: zero polynomial");
  const int d = p.degree();
  return RationalMap(homogenize(p, map.num, map.den, d), pow(map.den, static_cast<std::uint64_t>(d)));
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  const int d = std::max(outer.num.degree(), outer.den.degree());
  return RationalMap(homogenize(outer.num, inner.num, inner.den, d),
                     homogenize(outer.den, inner.num, inner.den, d));
}

}  // namespace ternary
