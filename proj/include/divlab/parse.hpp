#pragma once

// Text form of integer polynomials in t and u, e.g. "u^2 - t^3 + 2*t - 1".
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' digits)?
//   atom   := digits | 't' | 'T' | 'u' | '(' expr ')'

#include <cctype>
#include <string>
#include <string_view>

#include "divlab/poly.hpp"

namespace divlab {

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  BiPoly parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty polynomial");
    BiPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg +
                      " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (eat('*')) acc *= unary();
    return acc;
  }

  BiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (!eat('^')) return base;
    skip_ws();
    std::string digits = read_digits();
    if (digits.empty()) fail("exponent must be a non-negative integer literal");
    if (digits.size() > 4) fail("exponent too large");
    int e = std::stoi(digits);
    BiPoly r = BiPoly::constant(ring_one<IntPoly>());
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  }

  BiPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = read_digits();
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/' || s_[pos_] == 'e' || s_[pos_] == 'E'))
        fail("coefficients must be integers");
      return BiPoly::constant(IntPoly::constant(Integer(digits)));
    }
    if (c == 't' || c == 'T') {
      ++pos_;
      check_identifier_end();
      return BiPoly::constant(IntPoly::monomial(Integer(1), 1));
    }
    if (c == 'u' || c == 'U') {
      ++pos_;
      check_identifier_end();
      return BiPoly::monomial(ring_one<IntPoly>(), 1);
    }
    if (c == '(') {
      ++pos_;
      BiPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '.' || c == '/') fail("coefficients must be integers");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  void check_identifier_end() {
    if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      fail("unknown identifier (only t and u are variables)");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a polynomial in t and u. Throws ConfigError on malformed text.
inline BiPoly parse_bivariate(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Parse a polynomial in one variable (t or T); u must not occur.
inline IntPoly parse_univariate(std::string_view text) {
  BiPoly g = parse_bivariate(text);
  if (g.degree() > 0) throw ConfigError("expected a univariate polynomial in t, found u in \"" + std::string(text) + "\"");
  return g.zero() ? IntPoly() : g[0];
}

}  // namespace divlab
