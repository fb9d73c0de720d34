#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ncinv/group.hpp"

namespace ncinv {

// How a Nagata-Higman number entering a bound was resolved.
enum class NuMode { exact, razmyslov_upper, kuzmin_conjectural };

std::string to_string(NuMode mode);

// nu(k) for k <= 4 (1, 3, 6, 10); absent otherwise.
std::optional<std::uint64_t> nu_exact(unsigned k);
// Razmyslov: nu(k) <= k^2.
std::uint64_t nu_razmyslov_upper(unsigned k);
// Kuz'min's value k(k+1)/2, a lower bound conjectured to be exact.
std::uint64_t nu_kuzmin(unsigned k);

struct NuValue {
  std::uint64_t value;
  NuMode mode;
};

// Exact when known, else the Razmyslov upper bound. Safe to assert against.
NuValue nu_upper(unsigned k);

std::uint64_t noether_bound(std::size_t order);

// beta(G) from the table of known values: |G| for cyclic groups, 3 for the
// Klein four-group.
std::optional<std::uint64_t> known_beta(const FiniteGroup& group);

struct BoundValue {
  std::uint64_t value;
  NuMode mode;  // exact or razmyslov_upper; never conjectural
};

// c(R, d) + 3(beta(G) - 1) with
// c = 2(ell - 1) + (ell - 2) min{nu(nR) - 1, (nR - 1) d}.
// DomainError when ell < 2 or nR < 2.
BoundValue bound_thm_3_2(unsigned n_r, unsigned ell, unsigned d, std::uint64_t beta_g);

struct Thm33Bound {
  std::optional<std::uint64_t> exact;  // when every nu involved is known
  std::uint64_t razmyslov_upper;
  std::uint64_t kuzmin_conjectural;
};

// (nu(nR) - 1) nu(2 beta(G) ell_G) - 1.
Thm33Bound bound_thm_3_3(unsigned n_r, unsigned ell_g, std::uint64_t beta_g);

// (nu(nR) - 1) |G| (|G| + 1) - 1, for abelian G.
BoundValue bound_thm_3_4(unsigned n_r, std::uint64_t order);

}  // namespace ncinv
