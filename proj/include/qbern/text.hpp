#pragma once

// Parser for the canonical text forms produced by RatQ::render and
// MPoly::render. Accepts integers, the symbols q, X, Y, T, the operators
// + - * / ^ and parentheses. Division is only allowed by elements of Q(q).

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qbern/mpoly.hpp"

namespace qbern {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  MPoly parse_all() {
    MPoly v = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(src_) + "'");
  }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  MPoly term() {
    MPoly v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        MPoly d = unary();
        if (!d.is_constant()) fail("divisor must not involve X, Y or T");
        v = d.constant_value().inverse() * v;
      } else {
        return v;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    long e = integer();
    if (!negative) return base.pow(static_cast<unsigned>(e));
    if (!base.is_constant()) fail("negative exponent on X, Y or T");
    return MPoly(base.constant_value().pow(-e));
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(src_.substr(start, pos_ - start)));
  }

  MPoly atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return MPoly(RatQ(BigRat(BigInt(std::string(src_.substr(start, pos_ - start))))));
    }
    ++pos_;
    switch (c) {
      case 'q': return MPoly(RatQ::q());
      case 'X': return MPoly::var(Var::X);
      case 'Y': return MPoly::var(Var::Y);
      case 'T': return MPoly::var(Var::T);
      default: --pos_; fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MPoly parse_mpoly(std::string_view text) { return detail::ExprParser(text).parse_all(); }

inline RatQ parse_ratq(std::string_view text) {
  MPoly v = parse_mpoly(text);
  if (!v.is_constant()) throw ParseError("expected an element of Q(q): '" + std::string(text) + "'");
  return v.constant_value();
}

}  // namespace qbern
