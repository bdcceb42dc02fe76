#include "topdeg/parser.hpp"

#include <cctype>

#include "topdeg/errors.hpp"

namespace topdeg {

namespace {

// Recursive-descent parser for
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' uint)?
//   primary:= rational | identifier | '(' expr ')'
//   rational := uint ('/' uint)?
// Identifiers must name ring variables; there is no implicit multiplication.
class Parser {
public:
  Parser(std::string_view text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) err("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void err(const std::string& what) const {
    fail(ErrorKind::Parse, "col " + std::to_string(pos_) + ": " + what);
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

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    int sign = 1;
    while (true) {
      if (eat('-')) sign = -sign;
      else if (!eat('+')) break;
    }
    Polynomial acc = term();
    if (sign < 0) acc = -acc;
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (eat('^')) {
      unsigned e = parse_uint("exponent");
      if (e > 10000) err("exponent too large");
      return base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) err("missing ')'");
      return p;
    }
    if (c == '-' || c == '+') { // unary sign inside a product: -x, 2*-3 etc.
      int sign = 1;
      while (true) {
        if (eat('-')) sign = -sign;
        else if (!eat('+')) break;
      }
      Polynomial p = primary();
      return sign < 0 ? -p : p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == '\0') err("unexpected end of input");
    err(std::string("unexpected '") + c + "'");
  }

  unsigned long parse_uint(const char* what) {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      err(std::string("expected ") + what);
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + unsigned(s_[pos_] - '0');
      if (v > 100000000ul) err("integer literal too large");
      ++pos_;
    }
    return v;
  }

  Polynomial rational_literal() {
    unsigned long num = parse_uint("number");
    Rational q(static_cast<unsigned long>(num));
    if (eat('/')) {
      unsigned long den = parse_uint("denominator");
      if (den == 0) err("zero denominator");
      q = Rational(num, den);
      q.canonicalize();
    }
    return Polynomial::constant(ring_, q);
  }

  Polynomial identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
            s_[pos_] == '#'))
      ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    auto idx = ring_->index(name);
    if (!idx) {
      pos_ = start;
      err("unknown variable '" + name + "'");
    }
    return Polynomial::variable(ring_, *idx);
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

} // namespace topdeg
