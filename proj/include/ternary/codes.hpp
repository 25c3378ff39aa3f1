#pragma once

// The ternary cyclic code C_(1,e) of length 3^m - 1 with generator
// m_1(x) m_e(x), a certificate that its minimum distance is at least 4,
// and the sphere-packing ceiling on d.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ternary/checker.hpp"
#include "ternary/field.hpp"

namespace ternary {

class CodeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CodeSpec {
  unsigned m = 0;
  u64 e = 0;
  u64 n = 0;
  u64 k = 0;
  TritPoly g;
  unsigned d_lower = 1;        // certified: no nonzero codeword lighter than this
  u64 d_upper_bound = 0;       // sphere-packing ceiling for (n, k)
  std::optional<std::string> warning;  // set when |C_e| != m
};

/// A nonzero codeword given by its support.
struct Codeword {
  std::vector<std::pair<u64, Trit>> terms;  // (position, coefficient)
  std::size_t weight() const { return terms.size(); }
  TritPoly as_poly() const;
};

/// Builds g = m_1 m_e and checks g | x^n - 1. Throws CodeError when e is in
/// C_1. The distance fields are left for certify_optimal to fill.
CodeSpec build_code(const FieldCtx& ctx, u64 e);
CodeSpec build_code(unsigned m, u64 e);

/// Searches for a nonzero codeword of weight <= w (1 <= w <= 3), i.e.
/// sum a_j alpha^(i_j) = 0 and sum a_j alpha^(e i_j) = 0. Needs tables.
/// A returned witness has already been checked to be divisible by g.
std::optional<Codeword> has_weight_le(const CodeSpec& spec, const FieldCtx& ctx, unsigned w);

struct BoundResult {
  u64 d = 0;
  bool degenerate = false;  // k == n
};

/// Largest d with sum_{i<=t} C(n,i) 2^i <= 3^(n-k), t = floor((d-1)/2),
/// capped at n. Exact integer arithmetic.
BoundResult sphere_packing_max_d(u64 n, u64 k);

struct CertifyReport {
  CodeSpec spec;
  std::optional<Codeword> witness;
  u64 bound_d = 0;        // sphere_packing_max_d(n, n - 2m)
  bool parameters_ok = false;  // k == n - 2m
  bool optimal = false;
  Verdict verdict;        // the criterion route, for comparison
  bool routes_agree = false;
};

CertifyReport certify_optimal(const FieldCtx& ctx, u64 e);
CertifyReport certify_optimal(unsigned m, u64 e);

nlohmann::json certify_json(const CertifyReport& r);

}  // namespace ternary
