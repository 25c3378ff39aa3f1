#include "ternary/checker.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "ternary/cosets.hpp"

namespace ternary {

namespace {

constexpr u64 kZero = FieldCtx::kZeroLog;

void require_exhaustive(const FieldCtx& ctx, u64 e) {
  if (!ctx.has_tables()) {
    throw CheckerError("exhaustive mode needs m <= " + std::to_string(kMaxTableDegree));
  }
  if (e > ctx.q() - 2) throw CheckerError("e out of range [0, 3^m-2]");
}

// One pass over the field computing both solution sets.
//   x = alpha^i, log x^e = i*e, log (x+1)^e = Z(i)*e, log (x^e + 1) via Zech.
// Q3 holds iff (x+1)^e = x^e + 1, Q2 iff (x+1)^e = -(x^e + 1).
void solve_both(const FieldCtx& ctx, u64 e, SolutionSet* q2, SolutionSet* q3) {
  require_exhaustive(ctx, e);
  const u64 n = ctx.order();
  // x = 0: (1)^e + 0^e + 1 and 1 - 0^e - 1.
  const bool e_zero = e == 0;
  if (q2) q2->has_zero = e_zero;   // 1 + 1 + 1 = 0
  if (q3) q3->has_zero = !e_zero;  // 1 - 0 - 1 = 0
  u64 b = 0;  // i*e mod n, updated incrementally
  const u64 step = e % n;
  for (u64 i = 0; i < n; ++i) {
    const u64 a = ctx.log_pow(ctx.zech(i), e);
    const u64 c = ctx.log_add(b, 0);
    if (q3 && a == c) q3->logs.push_back(i);
    if (q2 && a == ctx.log_neg(c)) q2->logs.push_back(i);
    b += step;
    if (b >= n) b -= n;
  }
}

}  // namespace

bool check_q1(u64 e) { return e % 2 == 0; }

SolutionSet solve_q2(const FieldCtx& ctx, u64 e) {
  SolutionSet s;
  solve_both(ctx, e, &s, nullptr);
  return s;
}

SolutionSet solve_q3(const FieldCtx& ctx, u64 e) {
  SolutionSet s;
  solve_both(ctx, e, nullptr, &s);
  return s;
}

Verdict classify(const FieldCtx& ctx, u64 e) {
  require_exhaustive(ctx, e);
  Verdict v;
  v.m = ctx.m();
  v.e = e;
  v.applicable = !in_c1(e, ctx.m()) && coset_size(e, ctx.m()) == ctx.m();
  v.q1 = check_q1(e);
  solve_both(ctx, e, &v.q2, &v.q3);
  v.optimal = v.applicable && v.q1 && v.q2.only_one() && v.q3.only_zero();
  return v;
}

Verdict classify(unsigned m, u64 e) {
  if (m < 1 || m > kMaxTableDegree) {
    throw CheckerError("exhaustive mode needs 1 <= m <= " + std::to_string(kMaxTableDegree));
  }
  return classify(build_field(m), e);
}

SolutionSet necessary_eq_residual(const FieldCtx& ctx, u64 e, Residual which) {
  require_exhaustive(ctx, e);
  const u64 n = ctx.order();
  const u64 half = n / 2;
  SolutionSet out;
  for (u64 i = 1; i < n; ++i) {
    if (i == half) continue;  // x = -1
    const u64 z = ctx.zech(i);
    const u64 xe = mulmod(i, e % n, n);
    bool holds = false;
    if (which == Residual::sixth) {
      const u64 lhs = ctx.log_pow(z, 6 * (e % n));
      const u64 x6 = ctx.log_pow(xe, 6), x3 = ctx.log_pow(xe, 3);
      const u64 rhs = ctx.log_add(ctx.log_add(x6, 0), ctx.log_neg(x3));
      holds = lhs == rhs;
    } else {
      const u64 s = ctx.log_add(ctx.log_pow(z, 2 * (e % n)), ctx.log_neg(ctx.log_pow(xe, 2)));
      const u64 t = ctx.log_add(xe, ctx.log_neg(0));
      holds = ctx.log_add(s, t) == kZero;
    }
    if (holds) out.logs.push_back(i);
  }
  return out;
}

std::vector<Verdict> sweep(unsigned m, const SweepOptions& opts) {
  if (m < 1 || m > kMaxTableDegree) {
    throw CheckerError("exhaustive sweep needs 1 <= m <= " + std::to_string(kMaxTableDegree));
  }
  const FieldCtx ctx = build_field(m);
  const u64 hi = std::min(opts.e_max, ctx.q() - 2);
  std::vector<u64> es;
  for (u64 e = opts.e_min + (opts.e_min % 2); e <= hi; e += 2) es.push_back(e);

  std::vector<Verdict> out(es.size());
  std::atomic<std::size_t> next{0}, done{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < es.size();) {
      Verdict v = classify(ctx, es[k]);
      if (es[k] > 0 && (!v.q2.contains_one() || !v.q3.has_zero)) {
        throw std::logic_error("even e = " + std::to_string(es[k]) + " lost a base-field solution");
      }
      out[k] = std::move(v);
      const std::size_t d = done.fetch_add(1) + 1;
      if (opts.progress) opts.progress(d, es.size());
    }
  };
  const unsigned workers = std::max(1u, opts.workers);
  if (workers == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        work();
      } catch (...) {
        errors[w] = std::current_exception();
        next.store(es.size());
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return out;
}

std::string verdict_csv_header() { return "m,e,applicable,q1,q2_count,q3_count,optimal"; }

std::string verdict_csv_row(const Verdict& v) {
  auto b = [](bool x) { return x ? "true" : "false"; };
  return std::to_string(v.m) + ',' + std::to_string(v.e) + ',' + b(v.applicable) + ',' + b(v.q1) + ',' +
         std::to_string(v.q2.size()) + ',' + std::to_string(v.q3.size()) + ',' + b(v.optimal);
}

nlohmann::json verdict_json(const Verdict& v, bool solutions) {
  nlohmann::json j{{"m", v.m},
                   {"e", v.e},
                   {"applicable", v.applicable},
                   {"q1", v.q1},
                   {"q2_count", v.q2.size()},
                   {"q3_count", v.q3.size()},
                   {"optimal", v.optimal}};
  if (solutions) {
    auto set = [](const SolutionSet& s) { return nlohmann::json{{"zero", s.has_zero}, {"logs", s.logs}}; };
    j["q2"] = set(v.q2);
    j["q3"] = set(v.q3);
  }
  return j;
}

}  // namespace ternary
