#pragma once

// Text grammar for ordinal expressions, and the canonical renderer.
//
//   expr := term ('+' term)*
//   term := 'w' ('^' atom)? ('*' nat)? | nat
//   atom := nat | 'w' | '(' expr ')'
//
// Input need not be in normal form ("1+w" parses to w); the result is
// always canonical CNF, and format() is a parse-inverse on canonical form.

#include "ordram/ordinal.hpp"

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

namespace ordram {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

namespace detail {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    skip_space();
    Ordinal v = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return v;
  }

 private:
  static constexpr int kMaxDepth = 64;

  Ordinal parse_expr() {
    if (++depth_ > kMaxDepth) throw ParseError("expression nested too deeply", pos_);
    Ordinal acc = parse_term();
    skip_space();
    while (peek() == '+') {
      ++pos_;
      skip_space();
      acc = acc + parse_term();
      skip_space();
    }
    --depth_;
    return acc;
  }

  Ordinal parse_term() {
    skip_space();
    char c = peek();
    if (c == 'w') {
      ++pos_;
      Ordinal exponent(1);
      skip_space();
      if (peek() == '^') {
        ++pos_;
        exponent = parse_atom();
      }
      Ordinal base = omega_power(exponent);
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        return base * Ordinal(parse_nat());
      }
      return base;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal(parse_nat());
    throw ParseError("expected 'w' or a number", pos_);
  }

  Ordinal parse_atom() {
    skip_space();
    char c = peek();
    if (c == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    if (c == '(') {
      ++pos_;
      Ordinal v = parse_expr();
      skip_space();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal(parse_nat());
    throw ParseError("expected a number, 'w' or '('", pos_);
  }

  Nat parse_nat() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a number", pos_);
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits.push_back(text_[pos_++]);
    return Nat(digits);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace detail

inline Ordinal parse_ordinal(std::string_view text) {
  return detail::OrdinalParser(text).parse();
}

inline std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out << '+';
    first = false;
    if (t.exponent.is_zero()) {
      out << t.coeff;
      continue;
    }
    if (t.exponent == Ordinal(1)) {
      out << 'w';
    } else if (t.exponent.is_finite()) {
      out << "w^" << t.exponent.as_nat();
    } else if (t.exponent == Ordinal::omega()) {
      out << "w^w";
    } else {
      out << "w^(" << format_ordinal(t.exponent) << ')';
    }
    if (t.coeff != 1) out << '*' << t.coeff;
  }
  return out.str();
}

}  // namespace ordram
