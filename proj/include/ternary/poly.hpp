#pragma once

// Dense univariate polynomials over GF(3), their factorization and
// root analysis in extension fields.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ternary {

/// An element of GF(3), always held in {0, 1, 2}.
using Trit = std::uint8_t;

constexpr Trit trit(long long v) { return static_cast<Trit>(((v % 3) + 3) % 3); }
constexpr Trit trit_neg(Trit a) { return a == 0 ? 0 : static_cast<Trit>(3 - a); }

/// Dense polynomial in GF(3)[x], coefficients lowest degree first, with no
/// trailing zero coefficient. The zero polynomial has degree -1.
class TritPoly {
 public:
  static constexpr int kZeroDegree = -1;

  TritPoly() = default;
  /// Coefficients are reduced mod 3; trailing zeros are dropped.
  explicit TritPoly(std::vector<Trit> coeffs);
  TritPoly(std::initializer_list<int> coeffs);

  static TritPoly constant(long long c);
  static TritPoly monomial(std::size_t k, Trit c = 1);
  static TritPoly x() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Trit coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Trit{0}; }
  Trit lead() const { return c_.empty() ? Trit{0} : c_.back(); }
  bool is_monic() const { return lead() == 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::span<const Trit> coeffs() const { return c_; }

  Trit eval(Trit at) const;

  friend bool operator==(const TritPoly&, const TritPoly&) = default;

  TritPoly operator-() const;
  TritPoly& operator+=(const TritPoly& o);
  TritPoly& operator-=(const TritPoly& o);
  TritPoly& operator*=(const TritPoly& o);
  TritPoly& operator*=(Trit s);

  friend TritPoly operator+(TritPoly a, const TritPoly& b) { return a += b; }
  friend TritPoly operator-(TritPoly a, const TritPoly& b) { return a -= b; }
  friend TritPoly operator*(const TritPoly& a, const TritPoly& b);
  friend TritPoly operator*(TritPoly a, Trit s) { return a *= s; }
  friend TritPoly operator*(Trit s, TritPoly a) { return a *= s; }

 private:
  void trim();
  std::vector<Trit> c_;
};

/// Raised on division by the zero polynomial and other domain violations.
class PolyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DivMod {
  TritPoly quotient;
  TritPoly remainder;
};

DivMod divmod(const TritPoly& f, const TritPoly& g);
TritPoly operator/(const TritPoly& f, const TritPoly& g);
TritPoly operator%(const TritPoly& f, const TritPoly& g);

/// Scales f so its leading coefficient is 1 (zero stays zero).
TritPoly monic(const TritPoly& f);
/// Monic greatest common divisor; zero when both inputs are zero.
TritPoly gcd(const TritPoly& f, const TritPoly& g);
TritPoly derivative(const TritPoly& f);
TritPoly pow(const TritPoly& f, std::uint64_t k);
TritPoly powmod(const TritPoly& f, std::uint64_t k, const TritPoly& modulus);

/// f(x^3), which equals f(x)^3 in characteristic 3.
TritPoly frobenius(const TritPoly& f);
/// g with g^3 = f; requires f to be a polynomial in x^3.
TritPoly cube_root(const TritPoly& f);
/// x^(3^k) mod modulus, by k cube-and-reduce steps.
TritPoly x_pow_3k_mod(unsigned k, const TritPoly& modulus);
/// p(q(x)).
TritPoly compose(const TritPoly& p, const TritPoly& q);

/// Rabin's test: x^(3^d) = x mod f and gcd(x^(3^(d/r)) - x, f) = 1 for
/// every prime r dividing d = deg f.
bool is_irreducible(const TritPoly& f);

/// Sort order for factor listings: degree, then coefficients from the top
/// down using the signed ordering -1 < 0 < 1.
bool canonical_less(const TritPoly& a, const TritPoly& b);

struct Factorization {
  Trit unit = 1;
  /// Monic irreducible factors with multiplicities, in canonical order.
  std::vector<std::pair<TritPoly, unsigned>> factors;
  /// Seed that drove equal-degree splitting.
  std::uint64_t seed = 0;

  TritPoly expand() const;
  /// degree -> number of irreducible factors of that degree counted with
  /// multiplicity.
  std::map<int, unsigned> degree_multiset() const;
};

Factorization factor(const TritPoly& f, std::uint64_t seed = 0);

/// Distinct-degree split of a monic squarefree polynomial: (d, product of
/// its irreducible factors of degree d).
std::vector<std::pair<int, TritPoly>> distinct_degree_split(const TritPoly& f);

/// Squarefree decomposition: monic pairwise coprime parts with the
/// multiplicity they occur at in f.
std::vector<std::pair<TritPoly, unsigned>> squarefree_decomposition(const TritPoly& f);

class FieldCtx;

/// Roots of f in GF(3^m). `distinct` counts field elements; `with_multiplicity`
/// weights each by its multiplicity as a root of f. `factors` lists the
/// irreducible factors of f whose degree divides m, with multiplicity.
struct ExtRoots {
  unsigned m = 0;
  std::uint64_t distinct = 0;
  std::uint64_t with_multiplicity = 0;
  std::vector<std::pair<TritPoly, unsigned>> factors;
  /// Discrete logs of the nonzero roots (and whether 0 is a root), from an
  /// evaluation sweep; only filled when a table-backed field is supplied.
  std::optional<std::vector<std::uint64_t>> root_logs;
  bool zero_is_root = false;
};

/// Counts roots of f in GF(3^m) from factor degrees dividing m. With a
/// table-backed ctx of degree m, also sweeps the field, and throws
/// std::logic_error if the two counts disagree.
ExtRoots distinct_roots_in_ext(const TritPoly& f, unsigned m, const FieldCtx* ctx = nullptr);

/// A rational function num/den over GF(3), kept in lowest terms.
struct RationalMap {
  TritPoly num;
  TritPoly den;

  /// Throws PolyError on a zero denominator; divides out gcd(num, den).
  RationalMap(TritPoly n, TritPoly d);
  static RationalMap identity() { return {TritPoly::x(), TritPoly::constant(1)}; }

  friend bool operator==(const RationalMap&, const RationalMap&) = default;
};

/// p(num/den) written as (sum p_i num^i den^(deg p - i)) / den^(deg p),
/// reduced to lowest terms.
RationalMap substitute_rational(const TritPoly& p, const RationalMap& map);

/// outer(inner(t)) for rational maps, homogenized at degree
/// max(deg outer.num, deg outer.den).
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

// Text forms.

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses sums, differences, products (explicit '*' or juxtaposition),
/// parentheses and nonnegative integer powers in one variable. Integer
/// literals are reduced mod 3. Whitespace is ignored.
TritPoly parse_poly(std::string_view text, char var = 'x');

/// Signed rendering, highest degree first, e.g. "x^5+x^2+x-1".
std::string render_poly(const TritPoly& p, char var = 'x');

/// "t:" followed by the coefficients, lowest degree first ("t:0" for zero).
std::string to_trit_string(const TritPoly& p);
TritPoly from_trit_string(std::string_view s);

/// Factor listing such as "(x-1)^2(x^5+x^2+x-1)^2", prefixed by "-" when
/// the unit is -1.
std::string render_factorization(const Factorization& f, char var = 'x');

}  // namespace ternary
