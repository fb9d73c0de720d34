#include "ncinv/ncparse.hpp"

#include <cctype>
#include <vector>

#include "ncinv/errors.hpp"

namespace ncinv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t max_variable)
      : text_(text), max_variable_(max_variable) {}

  NCPoly parse() {
    NCPoly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool digit_at(std::size_t p) const {
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  Integer natural() {
    skip_ws();
    std::size_t start = pos_;
    while (digit_at(pos_)) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  bool at_rational() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    if (c == '-') {
      std::size_t p = pos_ + 1;
      while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
      return digit_at(p);
    }
    return false;
  }

  Rational rational() {
    bool negative = accept('-');
    Integer num = natural();
    Integer den = 1;
    if (accept('/')) {
      std::size_t at = pos_;
      den = natural();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  NCPoly expr() {
    NCPoly acc = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  NCPoly term() {
    if (at_rational()) {
      Rational coef = rational();
      if (!accept('*')) return NCPoly::constant(coef);
      NCPoly acc = factor();
      while (accept('*')) acc = acc * factor();
      return acc * coef;
    }
    NCPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  NCPoly factor() {
    NCPoly base = primary();
    while (accept('^')) {
      std::size_t at = pos_;
      Integer e = natural();
      if (e == 0) throw ParseError("exponent 0 is not allowed", at);
      if (e > 4096) throw ParseError("exponent too large", at);
      base = power(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  NCPoly primary() {
    char c = peek();
    if (c == 'x') {
      std::size_t at = pos_;
      ++pos_;
      if (!digit_at(pos_)) fail("expected a variable index after 'x'");
      Integer idx = natural();
      if (idx == 0 || idx > max_variable_) {
        throw ParseError("variable x" + idx.get_str() + " outside x1..x" +
                             std::to_string(max_variable_),
                         at);
      }
      return NCPoly::variable(static_cast<Letter>(idx.get_ui()));
    }
    if (c == '(') {
      ++pos_;
      NCPoly inner = expr();
      expect(')');
      return inner;
    }
    if (c == '[') {
      std::size_t at = pos_;
      ++pos_;
      std::vector<NCPoly> args;
      args.push_back(expr());
      while (accept(',')) args.push_back(expr());
      expect(']');
      if (args.size() < 2) throw ParseError("commutator needs at least two arguments", at);
      return commutator(args);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t max_variable_;
  std::size_t pos_ = 0;
};

std::string format_term(const Rational& coef, const Word& w) {
  if (w.empty()) return to_string(coef);
  std::string out;
  if (coef != 1) {
    out = to_string(coef) + "*";
  }
  return out + format_word(w);
}

}  // namespace

NCPoly parse_ncpoly(std::string_view text, std::size_t max_variable) {
  return Parser(text, max_variable).parse();
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.degree()) {
    std::size_t j = i;
    while (j < w.degree() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(w[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string format_ncpoly(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    if (leading) {
      out = format_term(c, w);
      leading = false;
    } else if (sgn(c) < 0) {
      out += " - " + format_term(-c, w);
    } else {
      out += " + " + format_term(c, w);
    }
  }
  return out;
}

}  // namespace ncinv
