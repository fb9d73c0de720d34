#include "ncinv/nagata_higman.hpp"

#include <algorithm>
#include <map>

#include "ncinv/errors.hpp"
#include "ncinv/linalg.hpp"
#include "ncinv/modular.hpp"

namespace ncinv {

namespace {

using modular::Residue;

struct Generator {
  std::vector<std::vector<Letter>> blocks;  // 1-based letters
  std::vector<std::uint32_t> columns;       // strictly decreasing
};

std::size_t factorial(unsigned k) {
  std::size_t f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

// Lexicographic rank of a permutation of 1..m (the word x1 ... xm has rank 0).
std::uint32_t permutation_rank(const std::vector<Letter>& w) {
  const std::size_t m = w.size();
  std::uint32_t rank = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint32_t smaller = 0;
    for (std::size_t j = i + 1; j < m; ++j) smaller += w[j] < w[i] ? 1 : 0;
    rank = rank * static_cast<std::uint32_t>(m - i) + smaller;
  }
  return rank;
}

Word permutation_word(std::uint32_t rank, unsigned m) {
  std::vector<std::uint32_t> digits(m);
  for (unsigned i = 1; i <= m; ++i) {
    digits[m - i] = rank % i;
    rank /= i;
  }
  std::vector<Letter> pool(m);
  for (unsigned i = 0; i < m; ++i) pool[i] = static_cast<Letter>(i + 1);
  std::vector<Letter> out;
  for (unsigned i = 0; i < m; ++i) {
    out.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + digits[i]);
  }
  return Word(std::move(out));
}

void check_limits(unsigned n, unsigned m, const Limits& limits) {
  if (n == 0) throw UsageError("Nagata-Higman index must be >= 1");
  if (m == 0) throw UsageError("Nagata-Higman degree must be >= 1");
  if (m > limits.nh_max_m) {
    throw ResourceError("multilinear degree " + std::to_string(m) + " exceeds nh_max_m",
                        factorial(m));
  }
}

std::vector<Generator> enumerate_generators(unsigned n, unsigned m) {
  std::vector<Generator> out;
  if (m < n) return out;
  // Restricted growth strings with exactly n blocks.
  std::vector<unsigned> rgs(m, 0);
  std::vector<Letter> word(m);
  std::vector<unsigned> order(n);
  while (true) {
    unsigned blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (blocks == n) {
      std::vector<std::vector<Letter>> parts(n);
      for (unsigned i = 0; i < m; ++i) parts[rgs[i]].push_back(static_cast<Letter>(i + 1));
      // Every ordering of every block.
      while (true) {
        Generator g{parts, {}};
        for (unsigned i = 0; i < n; ++i) order[i] = i;
        do {
          std::size_t pos = 0;
          for (unsigned b : order) {
            for (Letter l : parts[b]) word[pos++] = l;
          }
          g.columns.push_back(permutation_rank(word));
        } while (std::next_permutation(order.begin(), order.end()));
        std::sort(g.columns.rbegin(), g.columns.rend());
        out.push_back(std::move(g));
        std::size_t b = 0;
        while (b < n && !std::next_permutation(parts[b].begin(), parts[b].end())) ++b;
        if (b == n) break;
      }
    }
    // Next restricted growth string.
    std::size_t i = m;
    bool advanced = false;
    while (i-- > 1) {
      unsigned prefix_max = *std::max_element(rgs.begin(), rgs.begin() + static_cast<long>(i));
      if (rgs[i] <= prefix_max && rgs[i] + 1 < n) {
        ++rgs[i];
        std::fill(rgs.begin() + static_cast<long>(i) + 1, rgs.end(), 0u);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

NCPoly generator_poly(const Generator& g, unsigned m) {
  NCPoly p;
  for (auto c : g.columns) p.add_term(permutation_word(c, m), 1);
  return p;
}

// Echelon form of the generators modulo p; `independent` receives the
// indices of generators that enlarged the span.
modular::ModEchelon modular_span(const std::vector<Generator>& gens, std::size_t columns,
                                 Residue p, std::vector<std::size_t>* independent) {
  modular::ModEchelon ech(columns, p);
  modular::ModVector v;
  for (std::size_t i = 0; i < gens.size() && ech.rank() < columns; ++i) {
    v.clear();
    for (auto c : gens[i].columns) v.emplace_back(c, 1);
    if (ech.insert(v) && independent) independent->push_back(i);
  }
  return ech;
}

// The vector y orthogonal to the span with y_0 = 1 and y = 0 on the other
// free columns. Column 0 is free whenever the span is proper.
std::vector<Residue> modular_kernel_vector(const modular::ModEchelon& ech, std::size_t columns) {
  const Residue p = ech.prime();
  std::vector<Residue> y(columns, 0);
  y[0] = 1;
  for (std::uint32_t c = 1; c < columns; ++c) {
    std::int32_t r = ech.pivot_row(c);
    if (r < 0) continue;
    const auto& row = ech.rows()[static_cast<std::size_t>(r)];
    Residue acc = 0;
    for (std::size_t k = 1; k < row.size(); ++k) acc = (acc + row[k].second * y[row[k].first]) % p;
    y[c] = (p - acc) % p;
  }
  return y;
}

bool is_orthogonal_witness(const std::vector<Generator>& gens, const std::vector<Rational>& y) {
  if (y[0] != 1) return false;
  for (const auto& g : gens) {
    Rational s = 0;
    for (auto c : g.columns) s += y[c];
    if (!ncinv::is_zero(s)) return false;
  }
  return true;
}

bool exact_member(const std::vector<Generator>& gens, std::size_t columns) {
  EchelonBasis ech(columns);
  for (const auto& g : gens) {
    if (ech.rank() == columns) break;
    SparseVector v;
    for (auto c : g.columns) v.emplace_back(c, Rational(1));
    ech.insert(std::move(v));
  }
  return ech.contains(SparseVector{{0u, Rational(1)}});
}

// Decides membership; on success also reports the generators independent
// modulo the first prime that certified full rank.
bool decide_member(const std::vector<Generator>& gens, std::size_t columns,
                   std::vector<std::size_t>* independent) {
  if (gens.empty()) return false;
  modular::RationalLifter lifter(columns);
  for (std::size_t i = 0; i < modular::kPrimeCount; ++i) {
    std::vector<std::size_t> indep;
    auto ech = modular_span(gens, columns, modular::prime(i), &indep);
    // Rank over Q is at least the rank modulo p.
    if (ech.rank() == columns) {
      if (independent) *independent = std::move(indep);
      return true;
    }
    lifter.add(modular_kernel_vector(ech, columns), ech.prime());
    if (auto y = lifter.reconstruct(); y && is_orthogonal_witness(gens, *y)) return false;
  }
  return exact_member(gens, columns);
}

}  // namespace

NCPoly PowerCertificate::expand() const {
  NCPoly out;
  for (const auto& [c, u] : terms) out += power(u, n) * c;
  return out;
}

bool PowerCertificate::verify() const {
  std::vector<Letter> letters(m);
  for (unsigned i = 0; i < m; ++i) letters[i] = static_cast<Letter>(i + 1);
  return expand() == NCPoly(Word(letters));
}

std::vector<NCPoly> nh_generators(unsigned n, unsigned m, const Limits& limits) {
  check_limits(n, m, limits);
  std::vector<NCPoly> out;
  for (const auto& g : enumerate_generators(n, m)) out.push_back(generator_poly(g, m));
  return out;
}

std::vector<NCPoly> nh_multilinear_span(unsigned n, unsigned m, const Limits& limits) {
  check_limits(n, m, limits);
  if (n < 1 || m < n) throw PreconditionError("nh_multilinear_span needs m >= n");
  const std::size_t columns = factorial(m);
  EchelonBasis ech(columns);
  for (const auto& g : enumerate_generators(n, m)) {
    if (ech.rank() == columns) break;
    SparseVector v;
    for (auto c : g.columns) v.emplace_back(c, Rational(1));
    ech.insert(std::move(v));
  }
  auto rows = ech.reduced_rows();
  std::vector<NCPoly> out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    NCPoly p;
    for (const auto& [c, val] : *it) p.add_term(permutation_word(c, m), val);
    out.push_back(std::move(p));
  }
  return out;
}

bool nh_member(unsigned n, unsigned m, const Limits& limits) {
  check_limits(n, m, limits);
  return decide_member(enumerate_generators(n, m), factorial(m), nullptr);
}

std::optional<unsigned> nu(unsigned n, unsigned m_max, const Limits& limits) {
  if (n == 0) throw UsageError("Nagata-Higman index must be >= 1");
  for (unsigned m = n; m <= m_max; ++m) {
    if (!nh_member(n, m, limits)) continue;
    if (2 * m < n * (n + 1) || m > n * n) {
      throw InternalError("nu(" + std::to_string(n) + ") = " + std::to_string(m) +
                          " violates n(n+1)/2 <= nu(n) <= n^2");
    }
    return m;
  }
  return std::nullopt;
}

PowerCertificate power_decomposition(unsigned n, unsigned m, const Limits& limits) {
  check_limits(n, m, limits);
  const std::size_t columns = factorial(m);
  const auto gens = enumerate_generators(n, m);
  std::vector<std::size_t> basis;
  if (!decide_member(gens, columns, &basis)) {
    throw PreconditionError("x1...x" + std::to_string(m) + " is not a consequence of x^" +
                            std::to_string(n));
  }

  std::vector<Rational> coef;
  if (basis.size() == columns) {
    // One equation per word: sum over basis generators containing it.
    const std::size_t k = basis.size();
    std::vector<std::vector<SparseEntry>> eq(columns);
    for (std::size_t j = 0; j < k; ++j) {
      for (auto c : gens[basis[j]].columns) {
        eq[c].emplace_back(static_cast<std::uint32_t>(k - j), Rational(1));
      }
    }
    eq[0].emplace_back(0u, Rational(1));
    std::vector<SparseVector> rows;
    rows.reserve(columns);
    for (auto& e : eq) rows.push_back(make_sparse(std::move(e)));
    auto check = [&](const std::vector<Rational>& c) {
      std::vector<Rational> acc(columns, Rational(0));
      for (std::size_t j = 0; j < k; ++j) {
        if (ncinv::is_zero(c[j])) continue;
        for (auto col : gens[basis[j]].columns) acc[col] += c[j];
      }
      if (acc[0] != 1) return false;
      return std::all_of(acc.begin() + 1, acc.end(), [](const Rational& q) { return is_zero(q); });
    };
    auto solution = modular::certified_solve(rows, k, check);
    if (!solution) throw InternalError("power decomposition: no solution over the basis");
    coef = std::move(*solution);
  } else {
    // The modular basis was not conclusive; solve over all generators.
    std::vector<SparseVector> vectors;
    for (const auto& g : gens) {
      SparseVector v;
      for (auto c : g.columns) v.emplace_back(c, Rational(1));
      vectors.push_back(std::move(v));
    }
    auto solution = solve_combination(vectors, SparseVector{{0u, Rational(1)}});
    if (!solution) throw InternalError("power decomposition: inconsistent system");
    coef = std::move(*solution);
    basis.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) basis[i] = i;
  }

  // sum_sigma v_sigma(1)...v_sigma(n) = sum_{S nonempty} (-1)^(n-|S|) (sum_{i in S} v_i)^n
  std::map<NCPoly, Rational> merged;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (ncinv::is_zero(coef[j])) continue;
    const auto& blocks = gens[basis[j]].blocks;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      NCPoly u;
      unsigned size = 0;
      for (unsigned i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) {
          u.add_term(Word(blocks[i]), 1);
          ++size;
        }
      }
      Rational c = (n - size) % 2 == 0 ? coef[j] : Rational(-coef[j]);
      merged[u] += c;
    }
  }
  PowerCertificate cert{n, m, {}};
  for (auto& [u, c] : merged) {
    if (!ncinv::is_zero(c)) cert.terms.emplace_back(c, u);
  }
  if (!cert.verify()) throw InternalError("power certificate failed re-expansion");
  return cert;
}

DerivedIdentity derive_identity_3_4(const SpecialIdentity& h, const PowerCertificate& certificate) {
  if (certificate.n != h.n + 1) {
    throw PreconditionError("certificate is for x^" + std::to_string(certificate.n) +
                            ", the identity needs x^" + std::to_string(h.n + 1));
  }
  const unsigned nu = certificate.m;
  const Letter y = static_cast<Letter>(nu + 1);
  const Letter z = static_cast<Letter>(nu + 2);
  NCPoly full;
  for (const auto& [c, u] : certificate.terms) {
    std::vector<NCPoly> images = {u, NCPoly::variable(y), NCPoly::variable(z)};
    full += substitute(h.h, images) * c;
  }
  DerivedIdentity out{h.n, nu, {}, std::vector<NCPoly>(nu), std::vector<NCPoly>(nu)};
  for (const auto& [w, c] : full.terms()) {
    if (w.degree() != nu + 2u) continue;
    auto md = w.multidegree(nu + 2u);
    if (std::any_of(md.begin(), md.end(), [](int a) { return a != 1; })) continue;
    out.h_prime.add_term(w, c);
  }
  std::vector<Letter> lead_letters = {y};
  for (unsigned i = 1; i <= nu; ++i) lead_letters.push_back(static_cast<Letter>(i));
  lead_letters.push_back(z);
  const Word lead(lead_letters);
  if (out.h_prime.coefficient(lead) != 1) {
    throw InternalError("derived identity lacks y x1...x_nu z with coefficient 1");
  }
  for (const auto& [w, c] : out.h_prime.terms()) {
    if (w == lead) continue;
    if (w[0] <= nu) {
      out.left[w[0] - 1].add_term(w.subword(1, w.degree() - 1), c);
    } else if (w[w.degree() - 1] <= nu) {
      out.right[w[w.degree() - 1] - 1].add_term(w.subword(0, w.degree() - 1), c);
    } else {
      throw InternalError("derived identity has a term not bounded by some x_i");
    }
  }
  return out;
}

}  // namespace ncinv
