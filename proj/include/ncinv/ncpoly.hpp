#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "ncinv/rational.hpp"
#include "ncinv/word.hpp"

namespace ncinv {

// Element of the free associative algebra Q<x1, x2, ...>: a finitely
// supported map from words to nonzero rational coefficients.
class NCPoly {
 public:
  using TermMap = std::map<Word, Rational>;

  NCPoly() = default;
  NCPoly(const Word& w, const Rational& c = 1);

  static NCPoly constant(const Rational& c);
  static NCPoly variable(Letter i);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of w (zero when absent).
  Rational coefficient(const Word& w) const;

  // Adds c*w in place, dropping the term if it cancels.
  void add_term(const Word& w, const Rational& c);

  // Greatest word in deglex order. Requires a nonzero polynomial.
  const Word& leading_word() const;

  // Maximal / minimal word length; -1 for zero.
  int degree() const;
  int low_degree() const;
  bool is_homogeneous() const;
  Rational constant_term() const { return coefficient(Word()); }

  // Largest variable index occurring.
  Letter max_letter() const;

  // True when every letter of x1..xd occurs exactly once in every word.
  bool is_multilinear_in(std::size_t d) const;

  NCPoly homogeneous_component(std::size_t n) const;

  // Multihomogeneous components over x1..xd keyed by multidegree.
  std::map<std::vector<int>, NCPoly> multihomogeneous_components(std::size_t d) const;

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  NCPoly& operator*=(const Rational& c);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(NCPoly a) { return a *= Rational(-1); }
  friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
  friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const NCPoly& a, const NCPoly& b);

 private:
  TermMap terms_;
};

NCPoly power(const NCPoly& p, unsigned e);

// Left-normed commutator [u1, ..., un] = [[u1, ..., u(n-1)], un].
// Throws UsageError with fewer than two arguments.
NCPoly commutator(std::span<const NCPoly> args);
NCPoly commutator(const NCPoly& u, const NCPoly& v);

// Algebra endomorphism image x_i -> images[i-1]. Every occurring variable
// needs an image; with unitary == false images must have no constant term.
NCPoly substitute(const NCPoly& p, std::span<const NCPoly> images, bool unitary = true);

// Composite substitution: x_i -> substitute(inner[i-1], outer).
std::vector<NCPoly> compose_substitutions(std::span<const NCPoly> inner,
                                          std::span<const NCPoly> outer, bool unitary = true);

// s_k = sum over permutations of sign(sigma) x_sigma(1) ... x_sigma(k).
NCPoly standard_polynomial(unsigned k);

}  // namespace ncinv
