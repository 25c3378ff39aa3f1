#include <cctype>
#include <string>

#include "ternary/poly.hpp"

namespace ternary {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, char var) : s_(text), var_(var) {}

  TritPoly run() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    TritPoly p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Accepts ASCII '-' and the UTF-8 minus sign U+2212.
  bool eat_minus() {
    if (!at_end() && s_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool eat(char c) {
    if (!at_end() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  TritPoly expr() {
    skip_ws();
    bool negate = false;
    if (eat_minus()) {
      negate = true;
    } else {
      eat('+');
    }
    TritPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (eat('+')) {
        acc += term();
      } else if (eat_minus()) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() const {
    if (at_end()) return false;
    char c = s_[pos_];
    return c == '(' || c == var_ || std::isdigit(static_cast<unsigned char>(c));
  }

  TritPoly term() {
    TritPoly acc = factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  TritPoly factor() {
    TritPoly base = primary();
    for (;;) {
      skip_ws();
      if (!eat('^')) return base;
      skip_ws();
      base = pow(base, exponent());
    }
  }

  std::uint64_t exponent() {
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError("expected exponent", pos_);
    }
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) throw ParseError("exponent too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  TritPoly primary() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned digit_sum = 0;  // 10 = 1 (mod 3)
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        digit_sum = (digit_sum + static_cast<unsigned>(s_[pos_] - '0')) % 3;
        ++pos_;
      }
      return TritPoly::constant(digit_sum);
    }
    if (c == var_) {
      ++pos_;
      return TritPoly::x();
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      TritPoly inner = expr();
      skip_ws();
      if (!eat(')')) throw ParseError("unbalanced '(' opened at " + std::to_string(open), pos_);
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unknown variable '") + c + "', expected '" + var_ + "'", pos_);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

TritPoly parse_poly(std::string_view text, char var) { return Parser(text, var).run(); }

std::string render_poly(const TritPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Trit c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (c == 2) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (i == 0) {
      out += '1';
    } else {
      out += var;
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

std::string to_trit_string(const TritPoly& p) {
  std::string out = "t:";
  if (p.is_zero()) return out + "0";
  for (Trit c : p.coeffs()) out += static_cast<char>('0' + c);
  return out;
}

TritPoly from_trit_string(std::string_view s) {
  if (s.substr(0, 2) != "t:") throw ParseError("trit string must start with 't:'", 0);
  std::vector<Trit> c;
  for (std::size_t i = 2; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '2') throw ParseError("trit must be 0, 1 or 2", i);
    c.push_back(static_cast<Trit>(s[i] - '0'));
  }
  if (c.empty()) throw ParseError("empty trit string", 2);
  return TritPoly(std::move(c));
}

std::string render_factorization(const Factorization& f, char var) {
  std::string out = f.unit == 2 ? "-" : "";
  if (f.factors.empty()) return f.unit == 2 ? "-1" : "1";
  for (const auto& [p, k] : f.factors) {
    out += '(' + render_poly(p, var) + ')';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace ternary
