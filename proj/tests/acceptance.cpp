// One line per acceptance criterion; nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "fixtures/printed.hpp"
#include "ternary/checker.hpp"
#include "ternary/codes.hpp"
#include "ternary/constructions.hpp"
#include "ternary/cosets.hpp"

using namespace ternary;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const TritPoly kX = TritPoly::x();
const TritPoly kOne = TritPoly::constant(1);

void counterexample(Outcome& o, unsigned m, u64 e, unsigned count, u64 distinct, double budget) {
  const auto t0 = Clock::now();
  const TritPoly f = pow(kX + kOne, e) + pow(kX, e) + kOne;
  const Factorization fac = factor(f);
  o.require(fac.factors.size() == count + 1, "expected " + std::to_string(count + 1) + " distinct factors, got " +
                                                  std::to_string(fac.factors.size()));
  o.require(!fac.factors.empty() && fac.factors[0].first == parse_poly("x-1") && fac.factors[0].second == 2,
            "(x-1)^2 missing");
  std::set<std::string> distinct_factors;
  for (std::size_t i = 1; i < fac.factors.size(); ++i) {
    const auto& [p, k] = fac.factors[i];
    o.require(p.degree() == static_cast<int>(m) && k == 2 && is_irreducible(p), "factor " + render_poly(p) + " off shape");
    distinct_factors.insert(render_poly(p));
  }
  o.require(distinct_factors.size() == count, "factors not distinct");
  if (m == 5) o.require(distinct_factors.count("x^5+x^2+x-1") == 1, "x^5+x^2+x-1 missing");
  const FieldCtx ctx = build_field(m);
  const ExtRoots r = distinct_roots_in_ext(f, m, &ctx);
  o.require(r.distinct == distinct, "distinct roots " + std::to_string(r.distinct));
  o.require(r.with_multiplicity == 2 * distinct, "roots with multiplicity " + std::to_string(r.with_multiplicity));
  const Verdict v = classify(ctx, e);
  o.require(!v.optimal && v.q1 && v.applicable && !v.q2.only_one() && v.q2.size() == distinct, "verdict");
  const double s = seconds_since(t0);
  o.require(s < budget, "took " + std::to_string(s) + " s");
  o.detail = std::to_string(count) + " factors of degree " + std::to_string(m) + " squared, " + std::to_string(r.distinct) +
             " distinct / " + std::to_string(r.with_multiplicity) + " with multiplicity" +
             (o.detail.empty() ? "" : " | " + o.detail);
}

// Optimal with the full parameter triple [3^m-1, 3^m-1-2m, 4].
bool optimal_with_parameters(unsigned m, u64 e, std::string* why) {
  const FieldCtx ctx = build_field(m);
  const Verdict v = classify(ctx, e);
  const CodeSpec s = build_code(ctx, e);
  const u64 n = pow3(m) - 1;
  const bool params = s.n == n && s.k == n - 2 * m && sphere_packing_max_d(s.n, s.k).d == 4;
  if (!v.optimal || !params) {
    *why += " m=" + std::to_string(m) + ",e=" + std::to_string(e);
    return false;
  }
  return true;
}

Outcome criterion1() {
  Outcome o;
  counterexample(o, 5, 122, 12, 61, 1.0);
  return o;
}

Outcome criterion2() {
  Outcome o;
  counterexample(o, 7, 1094, 78, 547, 10.0);
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::string bad;
  const std::pair<unsigned, unsigned> mh[] = {{5, 1}, {5, 2}, {7, 5}, {7, 2}, {11, 7}, {11, 4}, {13, 8}, {13, 5}};
  for (auto [m, h] : mh) {
    const u64 e = (pow3(m - 1) - 1) / 2 + pow3(h) + 1;
    o.require(family_a(m, h).e == e, "family_a formula");
    optimal_with_parameters(m, e, &bad);
  }
  o.require(bad.empty(), "not optimal:" + bad);
  const FieldCtx f13 = build_field(13);
  const auto t0 = Clock::now();
  const Verdict v = classify(f13, (pow3(12) - 1) / 2 + pow3(8) + 1);
  const double s = seconds_since(t0);
  o.require(v.optimal && s < 2.0, "m=13 single classify took " + std::to_string(s) + " s");
  o.detail = "8 pairs optimal, m=13 classify " + std::to_string(s).substr(0, 5) + " s" +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::string bad;
  for (unsigned m = 3; m <= 13; m += 2) optimal_with_parameters(m, (pow3(m) - 1) / 2 - 3, &bad);
  o.require(bad.empty(), "not optimal:" + bad);
  if (o.pass) o.detail = "m = 3, 5, 7, 9, 11, 13 optimal";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::string bad;
  for (unsigned m : {7u, 11u, 13u}) {
    const u64 n = pow3(m) - 1;
    const FamilySpec s = family_c(m);
    o.require(s.valid && mulmod(11, s.e, n) == 2, "family C e for m=" + std::to_string(m));
    optimal_with_parameters(m, s.e, &bad);
  }
  o.require(bad.empty(), "not optimal:" + bad);
  for (unsigned m : {5u, 9u, 10u, 15u}) {
    bool rejected = false;
    try {
      rejected = !family_c(m).valid;
    } catch (const ConstructionError&) {
      rejected = true;
    }
    o.require(rejected, "m=" + std::to_string(m) + " accepted");
  }
  if (o.pass) o.detail = "m = 7, 11, 13 optimal; m = 5, 9, 10, 15 rejected";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto t0 = Clock::now();
  using M = std::map<int, unsigned>;
  const std::map<std::string, M> want{
      {"sq-I", {{1, 1}, {6, 2}, {9, 2}, {18, 12}}}, {"sq-II", {{1, 1}, {6, 2}}}, {"sq-III", {{1, 1}, {88, 1}}},
      {"nsq1-I", {{6, 2}, {9, 2}, {18, 12}}},       {"nsq1-II", {{6, 2}}},      {"nsq2-I", {{1, 1}, {6, 2}, {9, 2}, {18, 12}}},
      {"nsq2-II", {{1, 1}, {6, 2}}},                {"nsq2-III", {{1, 1}, {88, 1}}}, {"thmB-sq", {{1, 6}, {2, 3}}},
      {"thmB-nsq", {{2, 6}}},                       {"thmC-q3", {{1, 2}, {9, 2}}}, {"thmC-q2", {{1, 5}, {2, 1}, {4, 1}}},
  };
  std::map<std::string, std::string_view> printed;
  for (const auto& pc : fixtures::kIteratedCases) printed[std::string(pc.id)] = pc.expanded;
  for (const std::string& id : case_ids()) {
    try {
      const CaseReport r = verify_case(id);
      if (auto it = printed.find(id); it != printed.end()) {
        o.require(r.final_poly == parse_poly(it->second, 't'), id + " expansion differs");
      }
      o.require(r.factorization.expand() == r.final_poly, id + " re-expansion differs");
      if (auto it = want.find(id); it != want.end()) o.require(r.degree_multiset == it->second, id + " multiset");
      o.require(r.certificate.holds(), id + " certificate fails");
      if (id == "thmB-sq") {
        o.require(r.factorization.factors.size() == 2 && r.factorization.factors[0].first == parse_poly("t-1", 't') &&
                      r.factorization.factors[1].first == parse_poly("t^2+1", 't'),
                  "thmB-sq factors");
      }
    } catch (const std::exception& ex) {
      o.require(false, id + ": " + ex.what());
    }
  }
  const double s = seconds_since(t0);
  o.require(s < 30.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(case_ids().size()) + " cases, nsq1-III certified, " + std::to_string(s).substr(0, 5) + " s";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checked = 0, optimal = 0;
  for (unsigned m : {3u, 5u}) {
    const FieldCtx ctx = build_field(m);
    for (u64 e = 0; e <= ctx.q() - 2; e += 2) {
      if (in_c1(e, m) || coset_size(e, m) != m) continue;
      const bool a = classify(ctx, e).optimal;
      const bool b = certify_optimal(ctx, e).optimal;
      o.require(a == b, "disagree at m=" + std::to_string(m) + " e=" + std::to_string(e));
      ++checked;
      optimal += a;
    }
  }
  const double s = seconds_since(t0);
  o.require(s < 300.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " exponents agree (" + std::to_string(optimal) + " optimal)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (unsigned m = 3; m <= 13; ++m) {
    const u64 n = pow3(m) - 1;
    const BoundResult b = sphere_packing_max_d(n, n - 2 * m);
    o.require(b.d == 4 && !b.degenerate, "m=" + std::to_string(m) + " gives " + std::to_string(b.d));
  }
  if (o.pass) o.detail = "d = 4 for m = 3..13";
  return o;
}

Outcome criterion9() {
  Outcome o;
  // Field axioms, 10^4 random triples per m.
  for (unsigned m : {2u, 3u, 5u, 7u}) {
    const FieldCtx ctx = build_field(m);
    std::mt19937_64 rng(m);
    auto r = [&] { return ctx.from_index(rng() % ctx.q()); };
    bool ok = true;
    for (int i = 0; i < 10000; ++i) {
      const FieldElem a = r(), b = r(), c = r();
      ok = ok && ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c)) &&
           ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)) && ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)) &&
           ctx.mul(a, b) == ctx.mul(b, a) && ctx.add(a, b) == ctx.add(b, a);
    }
    o.require(ok, "field axioms m=" + std::to_string(m));
  }
  // Frobenius additivity, exhaustive m <= 5.
  for (unsigned m = 1; m <= 5; ++m) {
    const FieldCtx ctx = build_field(m);
    bool ok = true;
    for (u64 i = 0; i < ctx.q() && ok; ++i) {
      for (u64 j = 0; j < ctx.q(); ++j) {
        const FieldElem a = ctx.from_index(i), b = ctx.from_index(j);
        ok = ok && ctx.pow(ctx.add(a, b), 3) == ctx.add(ctx.pow(a, 3), ctx.pow(b, 3));
      }
    }
    o.require(ok, "Frobenius m=" + std::to_string(m));
  }
  // Zech round trip, exhaustive m <= 9.
  for (unsigned m = 1; m <= 9; ++m) {
    const FieldCtx ctx = build_field(m);
    bool ok = true;
    for (u64 i = 0; i < ctx.order(); ++i) {
      const FieldElem sum = ctx.add(ctx.exp(i), ctx.one());
      const u64 z = ctx.zech(i);
      ok = ok && (z == FieldCtx::kZeroLog ? sum.is_zero() : ctx.exp(z) == sum);
    }
    o.require(ok, "Zech m=" + std::to_string(m));
  }
  // t -> t^11 bijective when gcd(11, q-1) = 1, m <= 7.
  for (unsigned m = 1; m <= 7; ++m) {
    if (m % 5 == 0) continue;
    const FieldCtx ctx = build_field(m);
    std::vector<char> hit(ctx.q(), 0);
    for (u64 i = 0; i < ctx.order(); ++i) hit[ctx.index(ctx.pow(ctx.exp(i), 11))] = 1;
    o.require(std::count(hit.begin(), hit.end(), 1) == static_cast<long>(ctx.order()), "t^11 m=" + std::to_string(m));
  }
  // Coset partition and sizes dividing m, exhaustive m <= 10.
  for (unsigned m = 1; m <= 10; ++m) {
    const u64 n = pow3(m) - 1;
    std::vector<char> seen(n, 0);
    u64 total = 0;
    bool ok = true;
    for (u64 i = 0; i < n; ++i) {
      if (seen[i]) continue;
      const Coset c = coset(i, m);
      ok = ok && m % c.size() == 0;
      for (u64 j : c.members) ok = ok && !seen[j], seen[j] = 1;
      total += c.size();
    }
    o.require(ok && total == n, "coset partition m=" + std::to_string(m));
  }
  // gcd(e, 3^m-1) = 2 => |C_e| = m, all even e.
  for (unsigned m : {3u, 5u, 7u}) {
    const u64 n = pow3(m) - 1;
    bool ok = true;
    for (u64 e = 0; e < n; e += 2) ok = ok && (std::gcd(e, n) != 2 || coset_size(e, m) == m);
    o.require(ok, "coset size m=" + std::to_string(m));
  }
  // gcd(11, 3^m-1) = 1 iff 5 does not divide m.
  for (unsigned m = 1; m <= 100; ++m) o.require((gcd11(m).gcd == 1) == (m % 5 != 0), "gcd11 m=" + std::to_string(m));
  // Factor then expand, 100 random polynomials up to degree 300.
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const std::size_t deg = 1 + rng() % 300;
    std::vector<Trit> c(deg + 1);
    for (auto& t : c) t = static_cast<Trit>(rng() % 3);
    c[deg] = static_cast<Trit>(1 + rng() % 2);
    const TritPoly p(std::move(c));
    const Factorization f = factor(p, rng());
    bool ok = f.expand() == p;
    for (const auto& [q, k] : f.factors) ok = ok && is_irreducible(q);
    o.require(ok, "factor round trip #" + std::to_string(i));
  }
  if (o.pass) o.detail = "field, Frobenius, Zech, t^11, cosets, gcd11, factor round trip";
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                               criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (int i = 0; i < 9; ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    failed += !o.pass;
    std::printf("criterion %d: %s (%.2f s) %s\n", i + 1, o.pass ? "PASS" : "FAIL", seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
