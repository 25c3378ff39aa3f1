#include "ternary/constructions.hpp"

#include <algorithm>
#include <functional>

#include "ternary/cosets.hpp"

namespace ternary {

// ---------------------------------------------------------------- families

namespace {

void require_m(unsigned m) {
  if (m < 2 || m > kMaxFieldDegree) throw ConstructionError("family needs 2 <= m <= 40");
}

void assert_precondition(bool cond, const std::string& what, const FamilySpec& s) {
  if (!cond) {
    throw std::logic_error(what + " fails for m = " + std::to_string(s.m) + ", e = " + std::to_string(s.e));
  }
}

bool admissible_prime(unsigned m, unsigned lo) { return m >= lo && is_prime(m); }

}  // namespace

FamilySpec family_a(unsigned m, unsigned h) {
  require_m(m);
  if (h > m - 1) throw ConstructionError("family A needs 0 <= h <= m-1");
  FamilySpec s;
  s.family = Family::A;
  s.m = m;
  s.h = h;
  s.e = (pow3(m - 1) - 1) / 2 + pow3(h) + 1;
  if (!admissible_prime(m, 5)) {
    s.reason = "m must be a prime >= 5";
  } else if ((m != 5 && 2 * h == m + 3) || 2 * h + 3 == m || (m % 3 == 2 && 3 * h == m + 1)) {
    s.valid = true;
  } else {
    s.reason = "h is none of (m+3)/2 (m != 5), (m-3)/2, (m+1)/3 (m = 2 mod 3)";
  }
  if (s.valid) {
    assert_precondition(s.e % 2 == 0, "e even", s);
    assert_precondition(!in_c1(s.e, m), "e not in C_1", s);
    assert_precondition(coset_size(s.e, m) == m, "|C_e| = m", s);
  }
  return s;
}

std::string family_a_case(unsigned m, unsigned h) {
  if (m != 5 && 2 * h == m + 3) return "I";
  if (2 * h + 3 == m) return "II";
  if (m % 3 == 2 && 3 * h == m + 1) return "III";
  throw ConstructionError("(m, h) matches no case");
}

FamilySpec family_b(unsigned m) {
  require_m(m);
  FamilySpec s;
  s.family = Family::B;
  s.m = m;
  s.e = (pow3(m) - 1) / 2 - 3;
  s.valid = m % 2 == 1;
  if (!s.valid) s.reason = "m must be odd";
  if (s.valid) assert_precondition(gcd(s.e, pow3(m) - 1) == 2, "gcd(e, 3^m-1) = 2", s);
  return s;
}

FamilySpec family_c(unsigned m) {
  require_m(m);
  if (m % 5 == 0) throw ConstructionError("11 divides 3^m-1 when 5 | m, so 11 has no inverse");
  const u64 n = pow3(m) - 1;
  FamilySpec s;
  s.family = Family::C;
  s.m = m;
  s.e = mulmod(2, invmod(11, n), n);
  if (m % 2 == 0) {
    s.reason = "m must be odd";
  } else if (m < 7) {
    s.reason = "m must be at least 7";
  } else if (m % 9 == 0) {
    s.reason = "m must not be divisible by 9";
  } else {
    s.valid = true;
  }
  if (mulmod(11, s.e, n) != 2 % n) throw std::logic_error("11 e != 2 mod 3^m-1");
  if (s.valid) {
    assert_precondition(s.e % 2 == 0, "e even", s);
    assert_precondition(gcd(s.e, n) == 2, "gcd(e, 3^m-1) = 2", s);
  }
  return s;
}

Gcd11 gcd11(unsigned m) {
  if (m < 1) throw ConstructionError("gcd11 needs m >= 1");
  const u64 residue = (powmod(3, m, 11) + 10) % 11;
  return {residue == 0 ? u64{11} : u64{1}, residue};
}

// ------------------------------------------------------- symbolic layer

namespace {

// Polynomials in b with coefficients in GF(3)[t].
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly in_t(TritPoly p) {
    BiPoly r;
    r.c_.push_back(std::move(p));
    r.trim();
    return r;
  }
  static BiPoly b() {
    BiPoly r;
    r.c_ = {TritPoly{}, TritPoly::constant(1)};
    return r;
  }

  friend BiPoly operator+(const BiPoly& x, const BiPoly& y) {
    BiPoly r;
    r.c_.resize(std::max(x.c_.size(), y.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = x.at(i) + y.at(i);
    r.trim();
    return r;
  }
  friend BiPoly operator-(const BiPoly& x, const BiPoly& y) { return x + y * BiPoly::in_t(TritPoly::constant(2)); }
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y) {
    BiPoly r;
    if (x.c_.empty() || y.c_.empty()) return r;
    r.c_.resize(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      for (std::size_t j = 0; j < y.c_.size(); ++j) r.c_[i + j] += x.c_[i] * y.c_[j];
    }
    r.trim();
    return r;
  }
  friend BiPoly pow(BiPoly x, unsigned k) {
    BiPoly r = in_t(TritPoly::constant(1));
    for (; k; k >>= 1, x = x * x) {
      if (k & 1) r = r * x;
    }
    return r;
  }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  TritPoly at(std::size_t i) const { return i < c_.size() ? c_[i] : TritPoly{}; }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<TritPoly> c_;
};

TritPoly P(std::string_view s, char var = 't') { return parse_poly(s, var); }

// Expected expansions of the cleared-denominator equations.
struct IteratedCase {
  const char* id;
  const char* f;
  const char* g;
  int kind;  // 1: t^243 G vs F, 2: t G^3 vs F^3, 3: t^81 T vs S
  int sign;  // +1: t^k D - N, -1: N - t^k D
  const char* expected;
};

constexpr IteratedCase kIterated[] = {
    {"sq-I", "t^2-t-1", "t^2+t-1", 1, 1, "t^247-t^246+t^244+t^243+t^4+t^3-t+1"},
    {"sq-II", "t^2-t-1", "t^2+t-1", 2, 1, "t^13+t^12-t^10+t^9+t^4-t^3+t+1"},
    {"sq-III", "t^2-t-1", "t^2+t-1", 3, -1,
     "t^89-t^88-t^87+t^86+t^85-t^84-t^83+t^82+t^81+t^8+t^7-t^6-t^5+t^4+t^3-t^2-t+1"},
    {"nsq1-I", "t^2-t-1", "t-1", 1, 1, "t^246-t^244-t^4-t+1"},
    {"nsq1-II", "t^2-t-1", "t-1", 2, -1, "t^12-t^10+t^4+t^3-1"},
    {"nsq1-III", "t^2-t-1", "t-1", 3, 1, "t^88-t^87-t^86-t^84+t^83+t^82-t^8+t^7+t^6+t^4-t^3-t^2-1"},
    {"nsq2-I", "t^2-t", "t^2+t-1", 1, 1, "t^247-t^246-t^243-t^3+t"},
    {"nsq2-II", "t^2-t", "t^2+t-1", 2, 1, "t^13-t^10-t^9+t^3-t"},
    {"nsq2-III", "t^2-t", "t^2+t-1", 3, -1, "t^89+t^87+t^86-t^85-t^83-t^82+t^81-t^7-t^6+t^5+t^3+t^2-t"},
};

struct Admissible {
  std::string text;
  std::function<bool(unsigned)> pred;
};

Admissible admissible_for(const std::string& id) {
  if (id.ends_with("-I")) return {"prime m >= 7", [](unsigned m) { return admissible_prime(m, 7); }};
  if (id.ends_with("-II")) return {"prime m >= 5", [](unsigned m) { return admissible_prime(m, 5); }};
  if (id.ends_with("-III")) {
    return {"prime m >= 5 with m = 2 mod 3", [](unsigned m) { return admissible_prime(m, 5) && m % 3 == 2; }};
  }
  if (id.starts_with("thmB")) return {"odd m >= 3", [](unsigned m) { return m >= 3 && m % 2 == 1; }};
  return {"odd m >= 7 with 9, 5 not dividing m",
          [](unsigned m) { return m >= 7 && m % 2 == 1 && m % 9 != 0 && m % 5 != 0; }};
}

void expect_equal(const TritPoly& got, const TritPoly& want, const std::string& id, char var) {
  if (got != want) {
    throw ConstructionError(id + ": reconstructed " + render_poly(got, var) + " but expected " +
                            render_poly(want, var));
  }
}

void finish(CaseReport& r, std::uint64_t seed) {
  r.factorization = factor(r.final_poly, seed);
  if (r.factorization.expand() != r.final_poly) throw std::logic_error(r.case_id + ": factorization does not expand back");
  r.degree_multiset = r.factorization.degree_multiset();
  for (Trit a = 0; a < 3; ++a) {
    if (r.final_poly.eval(a) == 0) r.base_field_roots.push_back(a);
  }
  const Admissible adm = admissible_for(r.case_id);
  r.certificate.admissible = adm.text;
  for (const auto& [p, k] : r.factorization.factors) {
    const int d = p.degree();
    if (d <= 1) continue;
    for (unsigned mult = 1; mult <= r.certificate.search_multiples; ++mult) {
      if (adm.pred(static_cast<unsigned>(d) * mult)) {
        r.certificate.offending.push_back(d);
        break;
      }
    }
  }
}

// Monic factor lists compared as sets of (factor, multiplicity).
void expect_factors(const Factorization& got, std::initializer_list<std::pair<const char*, unsigned>> want,
                    const std::string& id, char var) {
  std::vector<std::pair<TritPoly, unsigned>> w;
  for (auto [s, k] : want) w.emplace_back(monic(parse_poly(s, var)), k);
  std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  if (w != got.factors) {
    throw ConstructionError(id + ": factors " + render_factorization(got, var) + " differ from the expected list");
  }
}

}  // namespace

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids{"sq-I",     "sq-II",   "sq-III",  "nsq1-I",   "nsq1-II",
                                            "nsq1-III", "nsq2-I",  "nsq2-II", "nsq2-III", "thmB-sq",
                                            "thmB-nsq", "thmC-q3", "thmC-q2"};
  return ids;
}

CaseReport verify_case(const std::string& case_id, std::uint64_t seed) {
  CaseReport r;
  r.case_id = case_id;
  for (const IteratedCase& c : kIterated) {
    if (case_id != c.id) continue;
    r.f = P(c.f);
    r.g = P(c.g);
    const RationalMap base(*r.f, *r.g);
    // Each Frobenius step t -> t^(3^(h+1)) applies the base map once more.
    const RationalMap second = compose(base, base);
    r.chain = {base, second};
    TritPoly num, den;
    std::size_t shift = 0;
    if (c.kind == 1) {
      num = second.num, den = second.den, shift = 243;
    } else if (c.kind == 2) {
      // t^(1/3) = F/G, cubed on both sides.
      num = frobenius(second.num), den = frobenius(second.den), shift = 1;
    } else {
      const RationalMap third = compose(base, second);
      r.chain.push_back(third);
      num = third.num, den = third.den, shift = 81;
    }
    TritPoly eq = TritPoly::monomial(shift) * den - num;
    if (c.sign < 0) eq = -eq;
    r.final_poly = eq;
    expect_equal(r.final_poly, P(c.expected), case_id, 't');
    finish(r, seed);
    return r;
  }

  const TritPoly t = TritPoly::x();
  const TritPoly one = TritPoly::constant(1);
  if (case_id == "thmB-sq" || case_id == "thmB-nsq") {
    // (t+1)^-6 - t^-6 +- t^-3 - 1 = 0 times (t+1)^6 t^6.
    const Trit s = case_id == "thmB-sq" ? 1 : 2;
    const TritPoly u6 = pow(t + one, 6), t6 = pow(t, 6);
    r.final_poly = t6 - u6 + s * (pow(t, 3) * u6) - u6 * t6;
    finish(r, seed);
    if (s == 1) {
      expect_factors(r.factorization, {{"t-1", 6}, {"t^2+1", 3}}, case_id, 't');
    } else {
      expect_factors(r.factorization, {{"t^2+t-1", 3}, {"t^2-t-1", 3}}, case_id, 't');
    }
    return r;
  }
  if (case_id == "thmC-q3") {
    r.var = 'y';
    // (-y - 1/y)^11 - (-y + 1/y)^11 = 1, cleared by y^11.
    const TritPoly y = TritPoly::x(), y2 = pow(y, 2);
    r.final_poly = pow(y, 11) - (pow(-y2 - one, 11) - pow(one - y2, 11));
    expect_equal(r.final_poly, P("y^20+y^11-y^4-1", 'y'), case_id, 'y');
    finish(r, seed);
    expect_factors(r.factorization,
                   {{"y-1", 2}, {"y^9+y^8+y^7+y^6+y^5+y^4+y^3+y^2-1", 1}, {"y^9+y^8+y^7+y^6+y^5+y^4+y^3+y^2-y+1", 1}},
                   case_id, 'y');
    return r;
  }
  if (case_id == "thmC-q2") {
    r.var = 'l';
    // -l^9 = 1 + z^2 (l^5 (l^2 + z) - z^2 l^3 + z^3 l) with z = l^2 + 1.
    const TritPoly l = TritPoly::x(), z = pow(l, 2) + one;
    const TritPoly bracket = pow(l, 5) * (pow(l, 2) + z) - pow(z, 2) * pow(l, 3) + pow(z, 3) * l;
    r.final_poly = -(pow(l, 9) + one + pow(z, 2) * bracket);
    expect_equal(r.final_poly, P("l^11-l^9+l^7-l^5-l^3-l-1", 'l'), case_id, 'l');
    finish(r, seed);
    expect_factors(r.factorization, {{"l-1", 5}, {"l^2+l-1", 1}, {"l^4+l^3-l^2-l-1", 1}}, case_id, 'l');
    return r;
  }
  throw ConstructionError("unknown case id '" + case_id + "'");
}

nlohmann::json case_json(const CaseReport& r) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [p, k] : r.factorization.factors) {
    factors.push_back({{"factor", render_poly(p, r.var)}, {"trits", to_trit_string(p)}, {"multiplicity", k}});
  }
  nlohmann::json degrees = nlohmann::json::object();
  for (auto [d, k] : r.degree_multiset) degrees[std::to_string(d)] = k;
  std::vector<int> roots(r.base_field_roots.begin(), r.base_field_roots.end());
  for (int& a : roots) a = a == 2 ? -1 : a;
  return {{"case_id", r.case_id},
          {"final_poly", to_trit_string(r.final_poly)},
          {"final_poly_text", render_poly(r.final_poly, r.var)},
          {"factors", factors},
          {"unit", r.factorization.unit == 2 ? -1 : 1},
          {"seed", r.factorization.seed},
          {"degree_multiset", degrees},
          {"base_field_roots", roots},
          {"certificate",
           {{"admissible_m", r.certificate.admissible},
            {"holds", r.certificate.holds()},
            {"offending_degrees", r.certificate.offending}}}};
}

// ---------------------------------------------------------- quadratics

QuadraticReport verify_quadratic_roots(Branch branch) {
  const TritPoly a = P("t^3+t+1"), c = P("t^4+t^3+t");
  const TritPoly b = branch == Branch::square ? P("t^4+t^3-t^2+t+1") : P("t^4+t^3+t^2+t+1");
  // a y^2 - b y + c at y = num/den, cleared by den^2.
  auto vanishes = [&](const TritPoly& num, const TritPoly& den) {
    return (a * num * num - b * num * den + c * den * den).is_zero();
  };
  auto same = [](const char* n1, const char* d1, const char* n2, const char* d2) {
    return P(n1) * P(d2) == P(n2) * P(d1);
  };
  QuadraticReport r;
  const TritPoly d = P("t^3+t+1");
  const bool factored = d == P("t-1") * P("t^2+t-1");
  if (branch == Branch::square) {
    r.first_root = vanishes(P("t^3+t^2+1"), d);
    r.second_root = vanishes(P("t"), P("1"));
    r.simplified = factored && same("t^3+t^2+1", "t^3+t+1", "t^2-t-1", "t^2+t-1");
    r.control_rejected = !vanishes(P("t^4+1"), d);
  } else {
    r.first_root = vanishes(P("t^4+1"), d);
    r.second_root = vanishes(P("t^3+t^2+t"), d);
    r.simplified = factored && same("t^4+1", "t^3+t+1", "t^2-t-1", "t-1") &&
                   same("t^3+t^2+t", "t^3+t+1", "t^2-t", "t^2+t-1");
    r.control_rejected = !vanishes(P("t"), P("1"));
  }
  return r;
}

// ------------------------------------------------------------ family C

bool ThmCReport::ok() const {
  const bool symbolic = sum_identity && lz_identity;
  if (!field_checked) return symbolic;
  return symbolic && q3.only_zero() && q2.only_one() && q3_via_y.empty() && q3_zero_via_y &&
         q2_via_l == std::vector<u64>{0} && beta_solutions == 1;
}

ThmCReport verify_thmC_identities(unsigned m) {
  const FamilySpec spec = family_c(m);
  if (!spec.valid) throw ConstructionError("m = " + std::to_string(m) + " is not admissible: " + spec.reason);
  ThmCReport r;
  r.m = m;
  r.e = spec.e;

  const BiPoly th = BiPoly::in_t(TritPoly::x()), be = BiPoly::b();
  const BiPoly l = th - be, z = th * be, s = th + be;
  const BiPoly bracket = pow(l, 5) * pow(s, 2) + pow(z, 2) * pow(be - th, 3) + pow(z, 3) * l;
  r.sum_identity = (pow(th, 2) + pow(be, 2)) * (pow(th, 9) - pow(be, 9)) ==
                   pow(th, 11) - pow(be, 11) + pow(z, 2) * bracket;
  // (t + b)^2 = l^2 + 4z = l^2 + z in characteristic 3.
  r.lz_identity = bracket == pow(l, 5) * (pow(l, 2) + z) - pow(z, 2) * pow(l, 3) + pow(z, 3) * l;

  if (m > kMaxTableDegree) return r;
  const FieldCtx ctx = build_field(m);
  r.field_checked = true;
  r.q3 = solve_q3(ctx, spec.e);
  r.q2 = solve_q2(ctx, spec.e);

  const TritPoly ypoly = verify_case("thmC-q3").final_poly;
  const TritPoly lpoly = verify_case("thmC-q2").final_poly;
  const FieldElem one = ctx.one();
  // x + 1 = theta^11, x = beta^11.
  auto roots11 = [&](const FieldElem& x, FieldElem& theta, FieldElem& beta) {
    const FieldElem x1 = ctx.add(x, one);
    theta = x1.is_zero() ? x1 : ctx.nth_root_coprime(x1, 11);
    beta = x.is_zero() ? x : ctx.nth_root_coprime(x, 11);
  };
  auto visit = [&](const FieldElem& x, bool zero) {
    FieldElem theta, beta;
    roots11(x, theta, beta);
    const FieldElem t2 = ctx.mul(theta, theta), b2 = ctx.mul(beta, beta);
    // Q3 reduces to theta^2 - beta^2 = 1.
    if (ctx.sub(t2, b2) == one) {
      const FieldElem y = ctx.add(theta, beta);
      const FieldElem yi = ctx.inv(y);
      const bool consistent = ctx.eval(ypoly, y).is_zero() && theta == ctx.neg(ctx.add(y, yi)) &&
                              beta == ctx.sub(yi, y);
      if (!consistent) throw std::logic_error("y substitution inconsistent");
      if (y == one && zero) {
        r.q3_zero_via_y = true;
      } else {
        r.q3_via_y.push_back(zero ? FieldCtx::kZeroLog : ctx.log(x));
      }
    }
    // Q2 reduces to theta^2 + beta^2 = -1.
    if (ctx.add(t2, b2) == ctx.neg(one)) {
      const FieldElem lv = ctx.sub(theta, beta);
      if (!ctx.eval(lpoly, lv).is_zero()) throw std::logic_error("l substitution inconsistent");
      r.q2_via_l.push_back(zero ? FieldCtx::kZeroLog : ctx.log(x));
    }
  };
  visit(ctx.zero(), true);
  for (u64 i = 0; i < ctx.order(); ++i) visit(ctx.exp(i), false);

  // (1 + beta) beta = -1 over the whole field; beta = 0 gives 0.
  const FieldElem minus_one = ctx.neg(one);
  for (u64 i = 0; i < ctx.order(); ++i) {
    const FieldElem b = ctx.exp(i);
    if (ctx.mul(ctx.add(one, b), b) == minus_one) ++r.beta_solutions;
  }
  return r;
}

}  // namespace ternary
