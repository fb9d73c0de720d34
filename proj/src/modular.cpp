#include "ncinv/modular.hpp"

#include "ncinv/errors.hpp"

namespace ncinv::modular {

Residue prime(std::size_t i) {
  static const std::vector<Residue> primes = [] {
    std::vector<Residue> out(kPrimes.begin(), kPrimes.end());
    Integer candidate(static_cast<unsigned long>(out.back()));
    while (out.size() < kPrimeCount) {
      candidate -= 2;
      if (mpz_probab_prime_p(candidate.get_mpz_t(), 30) > 0) out.push_back(candidate.get_ui());
    }
    return out;
  }();
  if (i >= primes.size()) throw InternalError("prime index out of range");
  return primes[i];
}

Residue inverse(Residue a, Residue p) {
  Residue result = 1;
  Residue base = a % p;
  Residue e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

Residue reduce(const Rational& q, Residue p) {
  Integer pm(static_cast<unsigned long>(p));
  Integer num = q.get_num() % pm;
  if (num < 0) num += pm;
  Integer den = q.get_den() % pm;
  if (den == 0) throw InternalError("prime divides a denominator");
  return num.get_ui() * inverse(den.get_ui(), p) % p;
}

ModEchelon::ModEchelon(std::size_t columns, Residue prime)
    : columns_(columns), p_(prime), pivot_row_(columns, -1) {}

bool ModEchelon::insert(ModVector v) {
  ModVector scratch;
  while (!v.empty()) {
    std::int32_t r = pivot_row_[v.front().first];
    if (r < 0) break;
    const ModVector& row = rows_[static_cast<std::size_t>(r)];
    Residue f = p_ - v.front().second;
    scratch.clear();
    scratch.reserve(v.size() + row.size());
    std::size_t i = 1;
    std::size_t j = 1;
    while (i < v.size() || j < row.size()) {
      if (j == row.size() || (i < v.size() && v[i].first > row[j].first)) {
        scratch.push_back(v[i++]);
      } else if (i == v.size() || row[j].first > v[i].first) {
        scratch.emplace_back(row[j].first, f * row[j].second % p_);
        ++j;
      } else {
        Residue val = (v[i].second + f * row[j].second) % p_;
        if (val) scratch.emplace_back(v[i].first, val);
        ++i;
        ++j;
      }
    }
    v.swap(scratch);
  }
  if (v.empty()) return false;
  Residue inv = inverse(v.front().second, p_);
  for (auto& e : v) e.second = e.second * inv % p_;
  if (v.front().first >= columns_) throw InternalError("column out of range");
  pivot_row_[v.front().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

void RationalLifter::add(const std::vector<Residue>& residues, Residue prime) {
  if (residues.size() != values_.size()) throw InternalError("residue vector size mismatch");
  Integer p(static_cast<unsigned long>(prime));
  if (primes_ == 0) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = Integer(residues[i] % prime);
    modulus_ = p;
  } else {
    // x = v + M * ((r - v) * M^{-1} mod p)
    Integer m_inv;
    mpz_invert(m_inv.get_mpz_t(), modulus_.get_mpz_t(), p.get_mpz_t());
    for (std::size_t i = 0; i < values_.size(); ++i) {
      Integer diff = Integer(static_cast<unsigned long>(residues[i])) - values_[i];
      Integer t = (diff % p) * m_inv % p;
      if (t < 0) t += p;
      values_[i] += modulus_ * t;
    }
    modulus_ *= p;
  }
  ++primes_;
}

std::optional<std::vector<Rational>> RationalLifter::reconstruct() const {
  std::vector<Rational> out;
  out.reserve(values_.size());
  for (const auto& v : values_) {
    auto q = rational_reconstruct(v, modulus_);
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return out;
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m;
  Integer r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer s0 = 0;
  Integer s1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Integer g = gcd(r1, s1);
  if (g != 1) return std::nullopt;
  Rational q(r1, s1);
  q.canonicalize();
  return q;
}

std::optional<std::vector<Residue>> solve_mod(const std::vector<SparseVector>& rows,
                                              std::size_t unknowns, Residue p) {
  ModEchelon ech(unknowns + 1, p);
  ModVector v;
  for (const auto& row : rows) {
    v.clear();
    for (const auto& [col, val] : row) {
      Residue r = reduce(val, p);
      if (r) v.emplace_back(col, r);
    }
    ech.insert(v);
  }
  if (ech.pivot_row(0) >= 0) return std::nullopt;

  // Back-substitution by increasing pivot column: every non-leading entry of
  // a row sits in a lower column, already solved or free.
  std::vector<Residue> value(unknowns + 1, 0);
  for (std::uint32_t col = 1; col <= unknowns; ++col) {
    std::int32_t r = ech.pivot_row(col);
    if (r < 0) continue;
    const ModVector& row = ech.rows()[static_cast<std::size_t>(r)];
    Residue acc = 0;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto& [c, a] = row[k];
      Residue x = c == 0 ? p - 1 : value[c];  // rhs enters as -1 * b
      acc = (acc + a * x) % p;
    }
    value[col] = (p - acc) % p;
  }
  std::vector<Residue> solution(unknowns);
  for (std::size_t j = 0; j < unknowns; ++j) solution[j] = value[unknowns - j];
  return solution;
}

std::optional<std::vector<Rational>> certified_solve(const std::vector<SparseVector>& rows,
                                                     std::size_t unknowns,
                                                     const SolutionCheck& verify,
                                                     std::size_t max_primes) {
  RationalLifter lifter(unknowns);
  for (std::size_t i = 0; i < max_primes && i < kPrimeCount; ++i) {
    Residue p = prime(i);
    bool usable = true;
    for (const auto& row : rows) {
      for (const auto& e : row) {
        if (Integer(e.second.get_den() % Integer(static_cast<unsigned long>(p))) == 0) usable = false;
      }
    }
    if (!usable) continue;
    auto residues = solve_mod(rows, unknowns, p);
    if (!residues) break;
    lifter.add(*residues, p);
    if (auto candidate = lifter.reconstruct(); candidate && verify(*candidate)) return candidate;
  }
  auto exact = solve_linear_system(rows, unknowns);
  if (exact && !verify(*exact)) throw InternalError("exact solution failed verification");
  return exact;
}

}  // namespace ncinv::modular
