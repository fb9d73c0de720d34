#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ncinv/linalg.hpp"
#include "ncinv/rational.hpp"

// Linear algebra over prime fields F_p with p < 2^31. Used only to locate
// answers quickly; every result that leaves this layer is re-verified with
// exact rational arithmetic by the caller.
namespace ncinv::modular {

using Residue = std::uint64_t;

inline constexpr std::array<Residue, 12> kPrimes = {
    2147483629ULL, 2147483587ULL, 2147483579ULL, 2147483563ULL, 2147483549ULL, 2147483543ULL,
    2147483497ULL, 2147483489ULL, 2147483477ULL, 2147483423ULL, 2147483399ULL, 2147483353ULL};

// The i-th prime below 2^31 in decreasing order (i < 64).
Residue prime(std::size_t i);
inline constexpr std::size_t kPrimeCount = 64;

Residue inverse(Residue a, Residue p);
Residue reduce(const Rational& q, Residue p);  // requires p not dividing the denominator

// Sparse vector over F_p, decreasing columns, no zeros.
using ModVector = std::vector<std::pair<std::uint32_t, Residue>>;

class ModEchelon {
 public:
  ModEchelon(std::size_t columns, Residue prime);

  Residue prime() const { return p_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true when v enlarged the span.
  bool insert(ModVector v);

  std::int32_t pivot_row(std::uint32_t column) const { return pivot_row_[column]; }
  const std::vector<ModVector>& rows() const { return rows_; }

 private:
  std::size_t columns_;
  Residue p_;
  std::vector<ModVector> rows_;
  std::vector<std::int32_t> pivot_row_;
};

// Accumulates residues of an integer vector over several primes (CRT) and
// recovers rationals by reconstruction.
class RationalLifter {
 public:
  explicit RationalLifter(std::size_t size) : values_(size, Integer(0)) {}

  void add(const std::vector<Residue>& residues, Residue prime);
  std::size_t primes_used() const { return primes_; }

  // nullopt if some entry has no reconstruction within the current modulus.
  std::optional<std::vector<Rational>> reconstruct() const;

 private:
  std::vector<Integer> values_;
  Integer modulus_ = 1;
  std::size_t primes_ = 0;
};

// r/s == a (mod m) with |r|, s <= sqrt(m/2), if it exists.
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m);

// Modular counterpart of solve_linear_system (same column convention).
// nullopt when the system is inconsistent modulo p.
std::optional<std::vector<Residue>> solve_mod(const std::vector<SparseVector>& rows,
                                              std::size_t unknowns, Residue p);

using SolutionCheck = std::function<bool(const std::vector<Rational>&)>;

// Rational solution of the system. Candidates are lifted from modular
// solutions and accepted only when `verify` confirms them exactly; if no
// candidate is confirmed the system is solved by exact elimination.
std::optional<std::vector<Rational>> certified_solve(const std::vector<SparseVector>& rows,
                                                     std::size_t unknowns,
                                                     const SolutionCheck& verify,
                                                     std::size_t max_primes = 16);

}  // namespace ncinv::modular
