#include "ternary/codes.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "ternary/cosets.hpp"

namespace ternary {

namespace {

void require_tables(unsigned m) {
  if (m < 1 || m > kMaxTableDegree) {
    throw CodeError("code verification needs 1 <= m <= " + std::to_string(kMaxTableDegree));
  }
}

}  // namespace

TritPoly Codeword::as_poly() const {
  TritPoly p;
  for (auto [pos, a] : terms) p += TritPoly::monomial(pos, a);
  return p;
}

CodeSpec build_code(const FieldCtx& ctx, u64 e) {
  const unsigned m = ctx.m();
  if (e > ctx.q() - 2) throw CodeError("e out of range [0, 3^m-2]");
  if (in_c1(e, m)) throw CodeError("e = " + std::to_string(e) + " lies in C_1");
  CodeSpec s;
  s.m = m;
  s.e = e;
  s.n = ctx.order();
  s.g = min_poly(1, ctx) * min_poly(e, ctx);
  s.k = s.n - static_cast<u64>(s.g.degree());
  // g | x^n - 1  <=>  x^n = 1 mod g
  if (!powmod(TritPoly::x(), s.n, s.g).is_one()) throw std::logic_error("generator does not divide x^n - 1");
  const unsigned le = coset_size(e, m);
  if (le != m) {
    s.warning = "|C_e| = " + std::to_string(le) + " != m, so k != n - 2m";
  }
  return s;
}

CodeSpec build_code(unsigned m, u64 e) {
  require_tables(m);
  return build_code(build_field(m), e);
}

std::optional<Codeword> has_weight_le(const CodeSpec& spec, const FieldCtx& ctx, unsigned w) {
  if (!ctx.has_tables() || ctx.m() != spec.m) throw CodeError("has_weight_le needs the table-backed field of the code");
  if (w < 1 || w > 3) throw CodeError("has_weight_le supports 1 <= w <= 3");
  const u64 n = spec.n;
  const u64 e = spec.e % n;
  const u64 half = n / 2;  // log(-1)
  auto lg = [&](Trit a) { return a == 1 ? u64{0} : half; };

  // Cyclic shifts and scaling preserve the code, so the first term can be
  // taken as 1 at position 0.
  std::optional<Codeword> found;
  if (w >= 2) {
    for (u64 i = 1; i < n && !found; ++i) {
      for (Trit a : {Trit{1}, Trit{2}}) {
        // 1 + a alpha^i = 0 and 1 + a alpha^(e i) = 0
        if (ctx.log_add(0, ctx.log_mul(lg(a), i)) == FieldCtx::kZeroLog &&
            ctx.log_add(0, ctx.log_mul(lg(a), mulmod(e, i, n))) == FieldCtx::kZeroLog) {
          found = Codeword{{{0, 1}, {i, a}}};
          break;
        }
      }
    }
  }
  if (w >= 3 && !found) {
    for (u64 i = 1; i < n && !found; ++i) {
      for (Trit a2 : {Trit{1}, Trit{2}}) {
        // a3 alpha^j = -(1 + a2 alpha^i) fixes j once a3 is chosen.
        const u64 s = ctx.log_add(0, ctx.log_mul(lg(a2), i));
        if (s == FieldCtx::kZeroLog) continue;
        for (Trit a3 : {Trit{1}, Trit{2}}) {
          const u64 j = ctx.log_mul(ctx.log_neg(s), lg(a3));  // a3^-1 = a3
          if (j == 0 || j == i) continue;
          const u64 t = ctx.log_add(ctx.log_add(0, ctx.log_mul(lg(a2), mulmod(e, i, n))),
                                    ctx.log_mul(lg(a3), mulmod(e, j, n)));
          if (t == FieldCtx::kZeroLog) {
            found = Codeword{{{0, 1}, {std::min(i, j), i < j ? a2 : a3}, {std::max(i, j), i < j ? a3 : a2}}};
            break;
          }
        }
        if (found) break;
      }
    }
  }
  if (found && !(found->as_poly() % spec.g).is_zero()) {
    throw std::logic_error("low-weight witness is not divisible by the generator");
  }
  return found;
}

BoundResult sphere_packing_max_d(u64 n, u64 k) {
  using boost::multiprecision::cpp_int;
  if (n == 0 || k > n) throw CodeError("sphere_packing_max_d needs n > 0 and 0 <= k <= n");
  if (k == n) return {n, true};
  cpp_int cap = 1;
  for (u64 i = 0; i < n - k; ++i) cap *= 3;
  cpp_int sum = 0, binom = 1, two = 1;
  u64 t = 0;
  // Largest t with the ball volume still inside the cap.
  for (u64 i = 0; i <= n; ++i) {
    sum += binom * two;
    if (sum > cap) break;
    t = i;
    binom = binom * (n - i) / (i + 1);
    two *= 2;
  }
  return {std::min<u64>(2 * t + 2, n), false};
}

CertifyReport certify_optimal(const FieldCtx& ctx, u64 e) {
  CertifyReport r;
  r.spec = build_code(ctx, e);
  r.witness = has_weight_le(r.spec, ctx, 3);
  r.spec.d_lower = r.witness ? static_cast<unsigned>(r.witness->weight()) : 4u;
  r.spec.d_upper_bound = sphere_packing_max_d(r.spec.n, r.spec.k).d;
  const u64 k_expected = r.spec.n - 2 * static_cast<u64>(ctx.m());
  r.parameters_ok = r.spec.k == k_expected;
  r.bound_d = sphere_packing_max_d(r.spec.n, k_expected).d;
  r.optimal = !r.witness && r.bound_d == 4 && r.parameters_ok;
  r.verdict = classify(ctx, e);
  r.routes_agree = r.verdict.optimal == r.optimal;
  return r;
}

CertifyReport certify_optimal(unsigned m, u64 e) {
  require_tables(m);
  return certify_optimal(build_field(m), e);
}

nlohmann::json certify_json(const CertifyReport& r) {
  nlohmann::json j{{"m", r.spec.m},
                   {"e", r.spec.e},
                   {"n", r.spec.n},
                   {"k", r.spec.k},
                   {"d_lower", r.spec.d_lower},
                   {"d_upper_bound", r.spec.d_upper_bound},
                   {"optimal", r.optimal},
                   {"generator", to_trit_string(r.spec.g)}};
  if (r.witness) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto [pos, a] : r.witness->terms) terms.push_back({{"position", pos}, {"coeff", a == 2 ? -1 : 1}});
    j["witness"] = terms;
  }
  if (r.spec.warning) j["warning"] = *r.spec.warning;
  return j;
}

}  // namespace ternary
