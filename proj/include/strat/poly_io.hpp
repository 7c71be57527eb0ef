#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "strat/poly.hpp"

namespace strat {

namespace detail {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*        '/' only by a nonzero constant
// factor := atom ('^' integer)?
// atom   := integer | identifier | '(' expr ')'
class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring), s_(text) {}

  Poly parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
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

  Poly expr() {
    Poly acc(ring_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
        acc = acc.scaled(ring_.domain().inv(d.constant_coef()));
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > static_cast<unsigned long>(Monomial::kMaxExponent)) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of input");
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
      Integer n(std::string(s_.substr(start, pos_ - start)));
      return Poly::constant(ring_, Rational(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_.var_index(name);
      if (!idx) {
        pos_ = start;
        fail("undeclared identifier '" + name + "'");
      }
      return Poly::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Ring& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(const Ring& ring, std::string_view text) {
  try {
    return detail::PolyParser(ring, text).parse();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline std::string to_string(const Rational& c) { return c.get_str(); }

/// Prints in the syntax accepted by parse_poly, e.g. "3*x^2*y - 1/2*z + 4".
inline std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool mon_one = t.mon.is_one();
    bool wrote = false;
    if (c != 1 || mon_one) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mon.size(); ++i) {
      if (t.mon[i] == 0) continue;
      if (wrote) os << "*";
      os << f.ring().vars()[i];
      if (t.mon[i] != 1) os << "^" << t.mon[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace strat
