#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncinv/action.hpp"
#include "ncinv/tideal.hpp"

namespace ncinv {

// Basis of F(R, V)^G in degree n: normal forms in reduced row echelon form,
// ascending leading word.
std::vector<NCPoly> invariant_basis(const RelativelyFreeAlgebra& algebra, const GroupAction& action,
                                    std::size_t n);

struct GeneratorReport {
  std::map<std::size_t, std::size_t> counts;  // degree -> number of new generators, 1..cap
  std::size_t beta = 0;                       // largest degree with a new generator
  bool conclusive = false;
  std::size_t verified_up_to = 0;
  std::optional<std::size_t> proven_bound;
  std::map<std::size_t, std::vector<NCPoly>> generators;  // new generators per degree
  // First new generator of each degree that has one.
  std::map<std::size_t, NCPoly> witnesses() const;
};

// Degreewise minimal generating system of F(R, V)^G up to degree cap. The
// result is conclusive only when cap >= proven_bound.
GeneratorReport generator_degrees(const RelativelyFreeAlgebra& algebra, const GroupAction& action,
                                  std::size_t cap, std::optional<std::size_t> proven_bound);

inline GeneratorReport beta_relfree(const RelativelyFreeAlgebra& algebra,
                                    const GroupAction& action, std::size_t cap,
                                    std::optional<std::size_t> proven_bound) {
  return generator_degrees(algebra, action, cap, proven_bound);
}

// 0 <= i < j <= |G| with words[i] ... words[j-1] invariant (0-based, so the
// subword is u_(i+1) ... u_j). Lexicographically least such pair.
std::pair<std::size_t, std::size_t> invariant_subword(const std::vector<Word>& words,
                                                      const MonomialAction& action);

struct DegreeCheck {
  std::size_t degree;
  std::size_t expected;  // dimension the inclusion must reach
  std::size_t achieved;  // dimension of the spanned subspace
  bool holds() const { return expected == achieved; }
};

struct VerificationReport {
  std::string target;
  bool holds = true;
  std::size_t verified_up_to = 0;
  std::vector<DegreeCheck> degrees;
  std::map<std::string, std::int64_t> parameters;
};

// Degreewise check of K[V]_+^beta in K[V] K[V]^G_+ for the commutative
// quotient, beta = beta(G, V) from generator_degrees.
VerificationReport check_inclusion_lemma_2_8(const GroupAction& action, std::size_t cap,
                                             ComputeOptions options = {});

// Degreewise check of F_+^(2 beta(G) ell) in F (F_+^G)^2 F, where ell is the
// least p with C^p = 0 found up to cap and beta(G) comes from the known table
// (falling back to |G|).
VerificationReport check_corollary_squares(const RelativelyFreeAlgebra& algebra,
                                           const GroupAction& action, std::size_t cap);

// For each degree <= cap: the products
//   X^a0 [x_i1, x_j1] X^a1 ... [x_ip, x_jp] X^ap
// with inner exponents a_i <= n and |a| <= nu - 1 span C^p modulo C^(p+1).
// `shape` supplies n and is required for p >= 2.
VerificationReport check_lemma_3_1(const RelativelyFreeAlgebra& algebra, unsigned p,
                                   std::size_t cap, const std::optional<SpecialIdentity>& shape);

// Randomized check of invariant_subword: `instances` seeded draws of a cyclic
// group Z_m (2 <= m <= max_order), characters for 1..4 variables and |G|
// words of length 1..max_length. Every returned subword is re-checked for
// invariance; `degrees` stays empty and the parameters record the counts.
VerificationReport check_invariant_subword(std::uint64_t seed, std::size_t instances,
                                           unsigned max_order = 6, unsigned max_length = 6);

}  // namespace ncinv
