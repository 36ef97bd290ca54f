#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "nagata/core/polynomial.hpp"

namespace nagata {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

namespace detail {

template <class K>
class ExprParser {
 public:
  using Poly = Polynomial<K>;

  ExprParser(const PolyRing<K>& ring, std::string_view text, int line) : ring_(ring), s_(text), line_(line) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, static_cast<int>(pos_) + 1); }

  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip();
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Poly acc = product();
    if (negate) acc = ring_.neg(acc);
    for (;;) {
      if (eat('+')) acc = ring_.add(acc, product());
      else if (eat('-')) acc = ring_.sub(acc, product());
      else return acc;
    }
  }

  Poly product() {
    Poly acc = power();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = ring_.mul(acc, power());
      } else if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                                        s_[pos_] == '_')) {
        // juxtaposition: 3x, 2(x+y)
        acc = ring_.mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (e > kMaxExponent) fail("exponent too large");
      base = ring_.pow(base, e);
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(std::string(s_.substr(start, pos_ - start)));
      return ring_.constant(ring_.field().from_mpz(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = ring_.index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return ring_.var(idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const PolyRing<K>& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

}  // namespace detail

/// Parses an expression built from integers, variables, + - * ^ and parentheses.
template <class K>
Polynomial<K> parse_polynomial(const PolyRing<K>& ring, std::string_view text, int line = 1) {
  return detail::ExprParser<K>(ring, text, line).parse();
}

}  // namespace nagata
