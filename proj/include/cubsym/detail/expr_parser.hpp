#pragma once

// Recursive-descent parser shared by the scalar and form syntaxes.
//
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/')? factor)*      juxtaposition multiplies
//   factor  := ('+'|'-') factor | primary ('^' '-'? nat)?
//   primary := nat | ident | '(' expr ')'
//
// Identifiers are a letter followed by digits ("s15", "z120", "x"), so "xyz"
// lexes as three identifiers. The Builder decides what values are and which
// identifiers are variables; scalar symbols are resolved here.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "cubsym/cyclofield.hpp"
#include "cubsym/errors.hpp"

namespace cubsym::detail {

std::optional<CycNum> scalar_symbol(std::string_view name);

template <class Builder>
class ExprParser {
 public:
  using Value = typename Builder::Value;

  ExprParser(std::string_view text, Builder& builder) : s_(text), b_(builder) {}

  Value parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const auto c = static_cast<unsigned char>(s_[pos_]);
    return std::isdigit(c) || std::isalpha(c) || c == '(';
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v = b_.add(v, term());
      } else if (peek('-')) {
        ++pos_;
        v = b_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = b_.mul(v, factor());
      } else if (peek('/')) {
        const std::size_t at = ++pos_;
        Value d = factor();
        auto c = b_.as_constant(d);
        if (!c) throw ParseError("divisor must be a constant", at);
        if (c->is_zero()) throw ParseError("division by zero", at);
        v = b_.mul(v, b_.from_scalar(c->inv()));
      } else if (starts_factor()) {
        v = b_.mul(v, factor());
      } else {
        return v;
      }
    }
  }

  Value factor() {
    if (peek('-')) {
      ++pos_;
      return b_.neg(factor());
    }
    if (peek('+')) {
      ++pos_;
      return factor();
    }
    Value base = primary();
    if (!peek('^')) return base;
    const std::size_t at = ++pos_;
    skip();
    bool negative = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const long e = natural();
    if (!negative) return b_.pow(base, e);
    auto c = b_.as_constant(base);
    if (!c || c->is_zero()) throw ParseError("negative exponent needs a nonzero constant base", at);
    return b_.from_scalar(c->pow(-e));
  }

  long natural() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a natural number", start);
    if (pos_ - start > 9) throw ParseError("exponent too large", start);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return b_.from_scalar(CycNum(Rational(Integer(std::string(s_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_++;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (auto v = b_.variable(name)) return *v;
      if (auto k = scalar_symbol(name)) return b_.from_scalar(*k);
      throw ParseError("unknown symbol '" + std::string(name) + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  Builder& b_;
  std::size_t pos_ = 0;
};

}  // namespace cubsym::detail
