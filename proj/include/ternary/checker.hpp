#pragma once

// Exhaustive decision procedure for the optimality of C_(1,e): e even, and
// (x+1)^e + x^e + 1 = 0 only at x = 1, and (x+1)^e - x^e - 1 = 0 only at
// x = 0. Solutions are found by a sweep over GF(3^m) in the log domain.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ternary/field.hpp"

namespace ternary {

class CheckerError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A set of field elements: whether 0 belongs to it, plus the discrete logs
/// of its nonzero members in ascending order.
struct SolutionSet {
  bool has_zero = false;
  std::vector<u64> logs;

  std::size_t size() const { return logs.size() + (has_zero ? 1 : 0); }
  bool contains_one() const { return !logs.empty() && logs.front() == 0; }
  bool only_one() const { return !has_zero && logs.size() == 1 && logs[0] == 0; }
  bool only_zero() const { return has_zero && logs.empty(); }
  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

struct Verdict {
  unsigned m = 0;
  u64 e = 0;
  bool applicable = false;  // e not in C_1 and |C_e| = m
  bool q1 = false;          // e even
  SolutionSet q2;           // (x+1)^e + x^e + 1 = 0
  SolutionSet q3;           // (x+1)^e - x^e - 1 = 0
  bool optimal = false;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

bool check_q1(u64 e);

/// Both require a table-backed ctx and 0 <= e <= q - 2.
SolutionSet solve_q2(const FieldCtx& ctx, u64 e);
SolutionSet solve_q3(const FieldCtx& ctx, u64 e);

Verdict classify(const FieldCtx& ctx, u64 e);
/// Builds the default field for m; throws CheckerError for m > 13.
Verdict classify(unsigned m, u64 e);

enum class Residual { sixth, square };

/// Elements x outside GF(3) satisfying
///   sixth:  (x+1)^(6e) = x^(6e) + 1 - x^(3e)
///   square: (x+1)^(2e) - x^(2e) + x^e - 1 = 0
/// Every Q2 or Q3 solution outside GF(3) satisfies both.
SolutionSet necessary_eq_residual(const FieldCtx& ctx, u64 e, Residual which);

struct SweepOptions {
  u64 e_min = 0;
  u64 e_max = ~u64{0};  // clamped to q - 2
  unsigned workers = 1;
  /// Called with (done, total) from worker threads; must be thread safe.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Verdicts for every even e in [e_min, e_max], in ascending e. The result
/// does not depend on the worker count. Throws std::logic_error if x = 1 or
/// x = 0 ever fails to solve Q2 or Q3 for an even e.
std::vector<Verdict> sweep(unsigned m, const SweepOptions& opts);

std::string verdict_csv_header();
std::string verdict_csv_row(const Verdict& v);
/// With solutions=true the solution logs are included, not just counts.
nlohmann::json verdict_json(const Verdict& v, bool solutions);

}  // namespace ternary
