#include "ncinv/bounds.hpp"

#include <algorithm>

#include "ncinv/errors.hpp"

namespace ncinv {

std::string to_string(NuMode mode) {
  switch (mode) {
    case NuMode::exact:
      return "exact";
    case NuMode::razmyslov_upper:
      return "razmyslov-upper";
    case NuMode::kuzmin_conjectural:
      return "kuzmin-conjectural";
  }
  return "unknown";
}

std::optional<std::uint64_t> nu_exact(unsigned k) {
  if (k >= 1 && k <= 4) return std::uint64_t{k} * (k + 1) / 2;
  return std::nullopt;
}

std::uint64_t nu_razmyslov_upper(unsigned k) { return std::uint64_t{k} * k; }

std::uint64_t nu_kuzmin(unsigned k) { return std::uint64_t{k} * (k + 1) / 2; }

NuValue nu_upper(unsigned k) {
  if (auto v = nu_exact(k)) return {*v, NuMode::exact};
  return {nu_razmyslov_upper(k), NuMode::razmyslov_upper};
}

std::uint64_t noether_bound(std::size_t order) {
  if (order == 0) throw DomainError("group order must be positive");
  return order;
}

std::optional<std::uint64_t> known_beta(const FiniteGroup& group) {
  if (group.is_cyclic()) return group.order();
  if (group.is_klein_four()) return 3;
  return std::nullopt;
}

BoundValue bound_thm_3_2(unsigned n_r, unsigned ell, unsigned d, std::uint64_t beta_g) {
  if (ell < 2) {
    throw DomainError("the bound assumes the variety properly contains the commutative algebras "
                      "(C != 0), i.e. ell >= 2; got ell = " + std::to_string(ell));
  }
  if (n_r < 2) throw DomainError("n(R) must be at least 2; got " + std::to_string(n_r));
  if (beta_g < 1) throw DomainError("beta(G) must be positive");
  NuValue nu = nu_upper(n_r);
  std::uint64_t m = std::min<std::uint64_t>(nu.value - 1, std::uint64_t{n_r - 1} * d);
  std::uint64_t c = 2 * std::uint64_t{ell - 1} + std::uint64_t{ell - 2} * m;
  return {c + 3 * (beta_g - 1), nu.mode};
}

Thm33Bound bound_thm_3_3(unsigned n_r, unsigned ell_g, std::uint64_t beta_g) {
  if (n_r < 2) throw DomainError("n(R) must be at least 2; got " + std::to_string(n_r));
  if (ell_g < 1 || beta_g < 1) throw DomainError("ell and beta(G) must be positive");
  const std::uint64_t arg = 2 * beta_g * ell_g;
  if (arg > 1u << 16) throw DomainError("Nagata-Higman argument too large");
  const unsigned k = static_cast<unsigned>(arg);
  auto inner_exact = nu_exact(n_r);
  std::uint64_t inner_upper = inner_exact ? *inner_exact : nu_razmyslov_upper(n_r);
  std::uint64_t inner_kuzmin = inner_exact ? *inner_exact : nu_kuzmin(n_r);
  Thm33Bound out{};
  if (auto outer = nu_exact(k); outer && inner_exact) {
    out.exact = (*inner_exact - 1) * *outer - 1;
  }
  out.razmyslov_upper = (inner_upper - 1) * nu_upper(k).value - 1;
  out.kuzmin_conjectural = (inner_kuzmin - 1) * nu_kuzmin(k) - 1;
  return out;
}

BoundValue bound_thm_3_4(unsigned n_r, std::uint64_t order) {
  if (n_r < 2) throw DomainError("n(R) must be at least 2; got " + std::to_string(n_r));
  if (order < 1) throw DomainError("group order must be positive");
  NuValue nu = nu_upper(n_r);
  return {(nu.value - 1) * order * (order + 1) - 1, nu.mode};
}

}  // namespace ncinv
