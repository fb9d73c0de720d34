#include "ncinv/rational.hpp"

#include <cctype>

#include "ncinv/errors.hpp"

namespace ncinv {

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string body(text.substr(begin, end - begin));
  if (body.empty()) throw UsageError("empty rational literal");

  std::size_t i = 0;
  if (body[i] == '-') ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  bool denominator_digit = false;
  for (; i < body.size(); ++i) {
    char c = body[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) denominator_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw UsageError("malformed rational literal '" + body + "'");
    }
  }
  if (!seen_digit || (seen_slash && !denominator_digit)) {
    throw UsageError("malformed rational literal '" + body + "'");
  }
  Rational q;
  std::size_t slash = body.find('/');
  Integer num(body.substr(0, slash), 10);
  Integer den(1);
  if (slash != std::string::npos) den = Integer(body.substr(slash + 1), 10);
  if (den == 0) throw UsageError("zero denominator in '" + body + "'");
  q = Rational(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ncinv
