#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ncinv/group.hpp"
#include "ncinv/ncpoly.hpp"
#include "ncinv/rational.hpp"
#include "ncinv/tideal.hpp"

namespace ncinv {

// Diagonal action of Z_{m1} x ... x Z_{mr}: an element with exponents
// (e_1, ..., e_r) scales x_i by prod_j zeta_{m_j}^(e_j * chi_i[j]). Roots of
// unity are never materialized; everything is exponent arithmetic.
class MonomialAction {
 public:
  MonomialAction(FiniteGroup group, std::vector<std::vector<int>> characters);

  // Z_m acting on x_i by zeta_m^(chi[i]).
  static MonomialAction cyclic(unsigned m, const std::vector<int>& chi);

  std::size_t dim() const { return characters_.size(); }
  const FiniteGroup& group() const { return group_; }
  const std::vector<unsigned>& orders() const { return *group_.cyclic_factors(); }
  const std::vector<unsigned>& character(std::size_t i) const { return characters_[i]; }

  // Summed character exponents of w, reduced mod each m_j.
  std::vector<unsigned> exponent_sums(const Word& w) const;
  std::vector<unsigned> exponent_sums(std::span<const int> multidegree) const;
  bool is_invariant(const Word& w) const;
  bool is_invariant_multidegree(std::span<const int> multidegree) const;

  // The scalar by which g acts on w is exp(2 pi i * phase), phase in [0, 1).
  Rational phase(FiniteGroup::Element g, const Word& w) const;

  // g.w as a rational polynomial; UsageError unless the scalar is +1 or -1.
  NCPoly act_on_word(FiniteGroup::Element g, const Word& w) const;
  NCPoly act(FiniteGroup::Element g, const NCPoly& p) const;

 private:
  FiniteGroup group_;
  std::vector<std::vector<unsigned>> characters_;
};

// Linear action by rational matrices, g(x_j) = sum_i M_g[i][j] x_i.
class MatrixAction {
 public:
  using Matrix = std::vector<std::vector<Rational>>;

  // Checks that g -> M_g is a homomorphism onto invertible matrices.
  MatrixAction(FiniteGroup group, std::vector<Matrix> matrices);

  std::size_t dim() const { return dim_; }
  const FiniteGroup& group() const { return group_; }
  const Matrix& matrix(FiniteGroup::Element g) const { return matrices_[g]; }

  NCPoly image_of_variable(FiniteGroup::Element g, std::size_t j) const;  // j is 1-based
  NCPoly act_on_word(FiniteGroup::Element g, const Word& w) const;
  NCPoly act(FiniteGroup::Element g, const NCPoly& p) const;

 private:
  FiniteGroup group_;
  std::size_t dim_;
  std::vector<Matrix> matrices_;
  std::vector<std::vector<NCPoly>> images_;
};

// Left translation on the basis indexed by the group elements.
MatrixAction regular_action(const FiniteGroup& group);

// perms[g][j] is the 0-based index of the variable that x_{j+1} is sent to.
MatrixAction permutation_action(const FiniteGroup& group,
                                const std::vector<std::vector<std::size_t>>& perms);

// Cyclic group acting through the powers of one permutation of the variables.
MatrixAction cyclic_permutation_action(unsigned m, const std::vector<std::size_t>& generator);

class GroupAction {
 public:
  GroupAction(MonomialAction action) : action_(std::move(action)) {}
  GroupAction(MatrixAction action) : action_(std::move(action)) {}

  std::size_t dim() const;
  const FiniteGroup& group() const;
  bool is_monomial() const { return std::holds_alternative<MonomialAction>(action_); }
  const MonomialAction& monomial() const;
  const MatrixAction& matrix() const;

  NCPoly act_on_word(FiniteGroup::Element g, const Word& w) const;
  NCPoly act(FiniteGroup::Element g, const NCPoly& p) const;

 private:
  std::variant<MonomialAction, MatrixAction> action_;
};

// Coordinates of a homogeneous polynomial of degree n in the basis of all
// degree-n words (column word_index(w, d)), and back.
SparseVector word_coordinates(const NCPoly& p, std::size_t d);
NCPoly from_word_coordinates(const SparseVector& v, std::size_t d, std::size_t n);

// Columns of the averaging operator (1/|G|) sum_g g on the quotient: one
// normal form per normal-form word of the component, in ascending order.
// MatrixAction only.
std::vector<NCPoly> reynolds_operator(const MatrixAction& action, const DegreeComponent& component,
                                      unsigned threads = 1);

// Basis of the invariants of the degree component, as normal forms sorted by
// ascending leading word (reduced row echelon form).
std::vector<NCPoly> reynolds_basis(const GroupAction& action, const DegreeComponent& component,
                                   unsigned threads = 1);

// Invariants of degree n in the free algebra.
std::vector<NCPoly> reynolds_basis(const GroupAction& action, std::size_t n, unsigned threads = 1);

// Reduced row echelon basis of the span of polys, sorted by ascending
// leading word.
std::vector<NCPoly> row_reduce(const std::vector<NCPoly>& polys);

}  // namespace ncinv
