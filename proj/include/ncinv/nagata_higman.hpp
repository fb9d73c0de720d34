#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncinv/ncpoly.hpp"
#include "ncinv/tideal.hpp"

namespace ncinv {

// x1 ... xm = sum coef * u^n with every u free of constant terms.
struct PowerCertificate {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<std::pair<Rational, NCPoly>> terms;

  NCPoly expand() const;
  // Exact re-expansion check.
  bool verify() const;
};

// Symmetrized block products sum_sigma v_sigma(1) ... v_sigma(n), one for each
// set partition of {1..m} into n blocks and each ordering of every block.
std::vector<NCPoly> nh_generators(unsigned n, unsigned m, const Limits& limits = {});

// Row-reduced basis (ascending leading word) of the multilinear degree-m part
// of the T-ideal of x^n in the free nonunitary algebra.
std::vector<NCPoly> nh_multilinear_span(unsigned n, unsigned m, const Limits& limits = {});

// Whether x1 ... xm lies in the T-ideal of x^n. Both answers are certified
// with exact arithmetic.
bool nh_member(unsigned n, unsigned m, const Limits& limits = {});

// Least m <= m_max with nh_member(n, m).
std::optional<unsigned> nu(unsigned n, unsigned m_max, const Limits& limits = {});

// Throws PreconditionError when x1 ... xm is not a consequence of x^n.
PowerCertificate power_decomposition(unsigned n, unsigned m, const Limits& limits = {});

// h' = y x1 ... x_nu z + sum_i (x_i v_i' + v_i'' x_i) in variables
// x1..x_nu, y = x_(nu+1), z = x_(nu+2).
struct DerivedIdentity {
  unsigned n = 0;
  unsigned nu = 0;
  NCPoly h_prime;
  std::vector<NCPoly> left;   // v_i', index i-1
  std::vector<NCPoly> right;  // v_i'', index i-1
};

// Substitutes the certificate of x1 ... x_nu as a sum of (n+1)-th powers into
// the special identity and keeps the component multilinear in all variables.
DerivedIdentity derive_identity_3_4(const SpecialIdentity& h, const PowerCertificate& certificate);

}  // namespace ncinv
