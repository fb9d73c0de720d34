#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ncinv/ncpoly.hpp"
#include "ncinv/rational.hpp"

namespace ncinv {

// Commutative polynomial over a fixed finite set of indeterminates t_0..t_{n-1}.
class CommPoly {
 public:
  using Exponents = std::vector<std::uint16_t>;

  CommPoly() = default;
  explicit CommPoly(std::size_t nvars) : nvars_(nvars) {}

  static CommPoly constant(std::size_t nvars, const Rational& c);
  static CommPoly indeterminate(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);

  CommPoly& operator+=(const CommPoly& other);
  CommPoly& operator*=(const Rational& c);
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend bool operator==(const CommPoly&, const CommPoly&) = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

// Finite-dimensional associative algebra given by structure constants
// e_i e_j = sum_k c[i][j][k] e_k. Associativity (and the unit, when given)
// is verified exhaustively at construction.
class StructureAlgebra {
 public:
  using Vector = std::vector<Rational>;

  // constants is indexed [i][j][k].
  StructureAlgebra(std::vector<std::vector<Vector>> constants, std::optional<Vector> unit);

  std::size_t dim() const { return dim_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  const std::optional<Vector>& unit() const { return unit_; }

  Vector multiply(const Vector& a, const Vector& b) const;
  Vector basis_vector(std::size_t i) const;

  // Full 2x2 matrices; basis e11, e12, e21, e22.
  static StructureAlgebra matrices_2x2();
  // Upper-triangular 2x2 matrices; basis e11, e12, e22.
  static StructureAlgebra upper_triangular_2x2();
  // 2x2 matrices over K[t]/(t^k) with off-diagonal entries in t*K[t]/(t^k).
  // Basis: e11 t^a, e22 t^a (0 <= a < k), then e12 t^b, e21 t^b (1 <= b < k).
  static StructureAlgebra rk_algebra(unsigned k);
  // One-dimensional algebra K.
  static StructureAlgebra field();

 private:
  std::size_t dim_;
  std::vector<Rational> c_;
  std::optional<Vector> unit_;
};

// Coordinates of f(X_1, ..., X_d) where X_i = sum_b t_{i,b} e_b are generic
// elements; indeterminate t_{i,b} has index (i-1)*dim + b.
std::vector<CommPoly> evaluate_generic(const NCPoly& f, const StructureAlgebra& algebra);

// True iff f is a polynomial identity of the algebra (over an infinite field
// of characteristic 0): every coordinate of the generic evaluation vanishes.
bool holds_in_algebra(const NCPoly& f, const StructureAlgebra& algebra);

// Evaluates f at the given algebra elements.
StructureAlgebra::Vector evaluate(const NCPoly& f, const StructureAlgebra& algebra,
                                  const std::vector<StructureAlgebra::Vector>& values);

}  // namespace ncinv
