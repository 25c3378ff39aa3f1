#pragma once

// The three exponent families with optimal C_(1,e), their number-theoretic
// side conditions, and a symbolic re-derivation of every polynomial used to
// rule out solutions outside GF(3).

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ternary/checker.hpp"
#include "ternary/field.hpp"
#include "ternary/poly.hpp"

namespace ternary {

class ConstructionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Family { A, B, C };

struct FamilySpec {
  Family family = Family::A;
  unsigned m = 0;
  std::optional<unsigned> h;  // family A only
  u64 e = 0;
  bool valid = false;
  std::string reason;
};

/// A: e = (3^(m-1) - 1)/2 + 3^h + 1 with 0 <= h <= m-1.
/// B: e = (3^m - 1)/2 - 3.
/// C: e = 2 * 11^-1 mod 3^m - 1; throws ConstructionError when 5 | m.
/// For valid specs the coset and gcd preconditions are asserted as well
/// (std::logic_error on failure).
FamilySpec family_a(unsigned m, unsigned h);
FamilySpec family_b(unsigned m);
FamilySpec family_c(unsigned m);

/// The sub-case ("I", "II" or "III") a valid family-A pair falls under.
std::string family_a_case(unsigned m, unsigned h);

struct Gcd11 {
  u64 gcd = 0;
  u64 residue = 0;  // (3^m - 1) mod 11
};
Gcd11 gcd11(unsigned m);

struct Certificate {
  std::string admissible;          // description of the m it covers
  unsigned search_multiples = 64;  // m = d k checked for k up to this
  std::vector<int> offending;      // degrees > 1 dividing some admissible m
  bool holds() const { return offending.empty(); }
};

struct CaseReport {
  std::string case_id;
  char var = 't';
  std::optional<TritPoly> f, g;  // base map f/g where the case has one
  std::vector<RationalMap> chain;
  TritPoly final_poly;
  Factorization factorization;
  std::map<int, unsigned> degree_multiset;
  std::vector<Trit> base_field_roots;
  Certificate certificate;
};

/// Case ids: sq-I, sq-II, sq-III, nsq1-I, nsq1-II, nsq1-III, nsq2-I,
/// nsq2-II, nsq2-III, thmB-sq, thmB-nsq, thmC-q3, thmC-q2.
const std::vector<std::string>& case_ids();

/// Rebuilds the case polynomial, compares it with the expected expansion
/// (ConstructionError with both sides on mismatch), factors it and runs the
/// degree certificate.
CaseReport verify_case(const std::string& case_id, std::uint64_t seed = 0);

nlohmann::json case_json(const CaseReport& r);

enum class Branch { square, nonsquare };

struct QuadraticReport {
  bool first_root = false;
  bool second_root = false;
  bool simplified = false;        // the roots reduce to the base maps
  bool control_rejected = false;  // a wrong root does not vanish
  bool ok() const { return first_root && second_root && simplified && control_rejected; }
};

QuadraticReport verify_quadratic_roots(Branch branch);

struct ThmCReport {
  unsigned m = 0;
  u64 e = 0;
  bool sum_identity = false;  // (t^2+b^2)(t^9-b^9) expansion
  bool lz_identity = false;   // bracket rewritten in l = t-b, z = tb
  bool field_checked = false;
  SolutionSet q3;             // exhaustive, when field_checked
  SolutionSet q2;
  std::vector<u64> q3_via_y;  // logs of x recovered from roots y
  bool q3_zero_via_y = false;
  std::vector<u64> q2_via_l;
  u64 beta_solutions = 0;     // #beta with (1 + beta) beta = -1
  bool ok() const;
};

/// Symbolic identities for any valid family-C m; with m <= 13 also the
/// field-level confirmation through the 11th-root substitution.
ThmCReport verify_thmC_identities(unsigned m);

}  // namespace ternary
