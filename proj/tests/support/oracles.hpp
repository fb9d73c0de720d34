#pragma once

// Independent reference computations used as test oracles. Nothing here
// touches the T-ideal or echelon code of the library.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ncinv/ncpoly.hpp"
#include "ncinv/rational.hpp"
#include "ncinv/structure_algebra.hpp"
#include "ncinv/word.hpp"

namespace oracle {

using ncinv::Rational;

// Rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Rank of a family of sparse rows keyed by arbitrary ordered column labels.
template <class Key>
std::size_t family_rank(const std::vector<std::map<Key, Rational>>& rows) {
  std::map<Key, std::size_t> index;
  for (const auto& r : rows) {
    for (const auto& [k, v] : r) index.emplace(k, 0);
  }
  std::size_t next = 0;
  for (auto& [k, i] : index) i = next++;
  std::vector<std::vector<Rational>> dense(rows.size(), std::vector<Rational>(next));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [k, v] : rows[r]) dense[r][index[k]] = v;
  }
  return dense_rank(std::move(dense));
}

inline std::size_t poly_rank(const std::vector<ncinv::NCPoly>& polys) {
  std::vector<std::map<ncinv::Word, Rational>> rows;
  for (const auto& p : polys) rows.emplace_back(p.terms().begin(), p.terms().end());
  return family_rank(rows);
}

// Dimension of the degree-n part of the relatively free algebra of var(A) in
// d variables: the rank of the words evaluated at generic elements of A.
inline std::size_t generic_quotient_dimension(const ncinv::StructureAlgebra& a, std::size_t d,
                                              std::size_t n) {
  using Key = std::pair<std::size_t, ncinv::CommPoly::Exponents>;
  std::vector<std::map<Key, Rational>> rows;
  for (const auto& w : ncinv::words_of_degree(d, n)) {
    auto coords = ncinv::evaluate_generic(ncinv::NCPoly(w), a);
    std::map<Key, Rational> row;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      for (const auto& [e, c] : coords[i].terms()) row[{i, e}] = c;
    }
    rows.push_back(std::move(row));
  }
  return family_rank(rows);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of commutative monomials of degree n in d variables.
inline std::uint64_t commutative_count(std::size_t d, std::size_t n) {
  return binomial(n + d - 1, d - 1);
}

// num/den in lowest terms.
inline Rational fraction(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline ncinv::Word random_word(std::mt19937_64& rng, std::size_t d, std::size_t len) {
  std::vector<ncinv::Letter> letters(len);
  for (auto& l : letters) l = static_cast<ncinv::Letter>(1 + rng() % d);
  return ncinv::Word(std::move(letters));
}

inline ncinv::NCPoly random_poly(std::mt19937_64& rng, std::size_t d, std::size_t max_degree,
                                 std::size_t terms) {
  ncinv::NCPoly p;
  for (std::size_t t = 0; t < terms; ++t) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 4);
    p.add_term(random_word(rng, d, rng() % (max_degree + 1)), fraction(num, den));
  }
  return p;
}

// Random small integer element of A.
inline ncinv::StructureAlgebra::Vector random_element(std::mt19937_64& rng,
                                                      const ncinv::StructureAlgebra& a) {
  ncinv::StructureAlgebra::Vector v(a.dim());
  for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
  return v;
}

// Evaluates f at random points; true when some evaluation is nonzero.
inline bool random_evaluation_nonzero(const ncinv::NCPoly& f, const ncinv::StructureAlgebra& a,
                                      std::mt19937_64& rng, int trials) {
  const std::size_t vars = f.max_letter();
  for (int t = 0; t < trials; ++t) {
    std::vector<ncinv::StructureAlgebra::Vector> values;
    for (std::size_t i = 0; i < vars; ++i) values.push_back(random_element(rng, a));
    for (const auto& c : ncinv::evaluate(f, a, values)) {
      if (c != 0) return true;
    }
  }
  return false;
}

}  // namespace oracle
