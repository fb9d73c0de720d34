#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ncinv/rational.hpp"

namespace ncinv {

// Sparse vector: (column, value) pairs sorted by strictly decreasing column,
// no zero values. The leading entry is the one with the greatest column.
using SparseEntry = std::pair<std::uint32_t, Rational>;
using SparseVector = std::vector<SparseEntry>;

// Sorts, merges duplicate columns and drops zeros.
SparseVector make_sparse(std::vector<SparseEntry> entries);

// x + a*y.
SparseVector add_scaled(const SparseVector& x, const Rational& a, const SparseVector& y);

Rational dot(const SparseVector& x, const SparseVector& y);

// Incremental row echelon form over the rationals. Rows are normalized to
// leading coefficient 1 and have pairwise distinct leading columns.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t columns = 0);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  // Adds v to the span; returns true when the rank grew.
  bool insert(SparseVector v);

  // Normal form of v modulo the span: supported on non-pivot columns only.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  bool is_pivot(std::uint32_t column) const { return pivot_row_[column] >= 0; }
  std::vector<std::uint32_t> pivot_columns() const;

  // Reduced row echelon form, rows sorted by decreasing leading column.
  std::vector<SparseVector> reduced_rows() const;

  // Rows as inserted (leading-normalized, not back-substituted).
  const std::vector<SparseVector>& rows() const { return rows_; }

 private:
  SparseVector reduce_leading(SparseVector v) const;

  std::size_t columns_;
  std::vector<SparseVector> rows_;
  std::vector<std::int32_t> pivot_row_;
};

// Solves a linear system given by equation rows. Unknown j lives in column
// (unknowns - j) and the right-hand side in column 0, so earlier unknowns are
// preferred as pivots. Free unknowns are set to zero; nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_linear_system(std::vector<SparseVector> rows,
                                                         std::size_t unknowns);

// Coefficients c with sum_i c[i] * vectors[i] == target, or nullopt when
// target is outside the span. Unknowns earlier in the list are preferred as
// pivots; free unknowns are set to zero.
std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseVector>& vectors,
                                                       const SparseVector& target);

}  // namespace ncinv
