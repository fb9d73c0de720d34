#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncinv {

// Exact unbounded rationals. Always kept canonical (reduced, positive
// denominator) by the arithmetic operators of gmpxx.
using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q" and "-p/q" with optional surrounding whitespace.
// Throws UsageError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace ncinv
