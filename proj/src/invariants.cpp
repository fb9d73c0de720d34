#include "ncinv/invariants.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "ncinv/bounds.hpp"
#include "ncinv/errors.hpp"

namespace ncinv {

namespace {

// Subspace of the degree-n part of K<x1..xd> in word coordinates.
class DegreeSpan {
 public:
  DegreeSpan(std::size_t d, std::size_t n) : d_(d), n_(n) {
    double size = 1;
    for (std::size_t t = 0; t < n; ++t) size *= static_cast<double>(d);
    if (size > static_cast<double>(1u << 26)) {
      throw ResourceError("degree space too large", static_cast<std::size_t>(size));
    }
    basis_ = EchelonBasis(static_cast<std::size_t>(size));
  }

  bool insert(const NCPoly& p) {
    if (p.is_zero()) return false;
    return basis_.insert(word_coordinates(p, d_));
  }
  std::size_t rank() const { return basis_.rank(); }

  std::vector<NCPoly> basis() const {
    std::vector<NCPoly> out;
    for (const auto& row : basis_.rows()) out.push_back(from_word_coordinates(row, d_, n_));
    return out;
  }

 private:
  std::size_t d_;
  std::size_t n_;
  EchelonBasis basis_;
};

void check_dimension(const RelativelyFreeAlgebra& algebra, const GroupAction& action) {
  if (algebra.dimension() != action.dim()) {
    throw UsageError("action acts on " + std::to_string(action.dim()) +
                     " variables but the algebra has " + std::to_string(algebra.dimension()));
  }
}

// Normal forms of the products a[i] * b[j], computed in parallel, in a fixed
// order.
std::vector<NCPoly> products(const RelativelyFreeAlgebra& algebra, const std::vector<NCPoly>& a,
                             const std::vector<NCPoly>& b) {
  std::vector<NCPoly> out(a.size() * b.size());
  parallel_for(out.size(), algebra.options().threads, [&](std::size_t k) {
    out[k] = algebra.normal_form(a[k / b.size()] * b[k % b.size()]);
  });
  return out;
}

std::vector<NCPoly> variables(std::size_t d) {
  std::vector<NCPoly> out;
  for (std::size_t i = 1; i <= d; ++i) out.push_back(NCPoly::variable(static_cast<Letter>(i)));
  return out;
}

// All exponent vectors in N^d with the given total.
void exponent_vectors(std::size_t d, std::size_t total, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == d) {
    cur.push_back(static_cast<int>(total));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= total; ++k) {
    cur.push_back(static_cast<int>(k));
    exponent_vectors(d, total - k, cur, out);
    cur.pop_back();
  }
}

Word monomial(const std::vector<int>& a) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < a.size(); ++i) {
    letters.insert(letters.end(), static_cast<std::size_t>(a[i]), static_cast<Letter>(i + 1));
  }
  return Word(std::move(letters));
}

}  // namespace

std::map<std::size_t, NCPoly> GeneratorReport::witnesses() const {
  std::map<std::size_t, NCPoly> out;
  for (const auto& [n, gens] : generators) {
    if (!gens.empty()) out.emplace(n, gens.front());
  }
  return out;
}

std::vector<NCPoly> invariant_basis(const RelativelyFreeAlgebra& algebra, const GroupAction& action,
                                    std::size_t n) {
  check_dimension(algebra, action);
  return reynolds_basis(action, algebra.component(n), algebra.options().threads);
}

GeneratorReport generator_degrees(const RelativelyFreeAlgebra& algebra, const GroupAction& action,
                                  std::size_t cap, std::optional<std::size_t> proven_bound) {
  check_dimension(algebra, action);
  const std::size_t d = algebra.dimension();
  GeneratorReport report;
  report.verified_up_to = cap;
  report.proven_bound = proven_bound;
  report.conclusive = proven_bound.has_value() && cap >= *proven_bound;

  std::vector<std::vector<NCPoly>> inv(cap + 1);
  std::vector<std::vector<NCPoly>> gens(cap + 1);
  for (std::size_t n = 1; n <= cap; ++n) {
    inv[n] = invariant_basis(algebra, action, n);
    DegreeSpan span(d, n);
    // Degree-n part of the subalgebra generated so far: lower-degree
    // generators times the (already generated) invariants of the rest.
    for (std::size_t k = 1; k < n; ++k) {
      if (gens[k].empty() || inv[n - k].empty()) continue;
      for (const auto& p : products(algebra, gens[k], inv[n - k])) span.insert(p);
    }
    for (const auto& b : inv[n]) {
      if (span.insert(b)) gens[n].push_back(b);
    }
    report.counts[n] = gens[n].size();
    if (!gens[n].empty()) {
      report.beta = n;
      report.generators[n] = gens[n];
    }
  }
  return report;
}

std::pair<std::size_t, std::size_t> invariant_subword(const std::vector<Word>& words,
                                                      const MonomialAction& action) {
  const std::size_t order = action.group().order();
  if (words.size() != order) {
    throw UsageError("invariant_subword needs exactly |G| = " + std::to_string(order) +
                     " words, got " + std::to_string(words.size()));
  }
  const auto& m = action.orders();
  std::vector<std::vector<unsigned>> prefix(order + 1, std::vector<unsigned>(m.size(), 0));
  for (std::size_t i = 0; i < order; ++i) {
    if (words[i].empty()) throw UsageError("word " + std::to_string(i + 1) + " is empty");
    auto s = action.exponent_sums(words[i]);
    for (std::size_t j = 0; j < m.size(); ++j) prefix[i + 1][j] = (prefix[i][j] + s[j]) % m[j];
  }
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = i + 1; j <= order; ++j) {
      if (prefix[i] == prefix[j]) return {i, j};
    }
  }
  throw InternalError("pigeonhole failed: more characters than group elements");
}

VerificationReport check_inclusion_lemma_2_8(const GroupAction& action, std::size_t cap,
                                             ComputeOptions options) {
  const std::size_t d = action.dim();
  RelativelyFreeAlgebra algebra(Variety::commutative(), d, options);
  const std::size_t order = action.group().order();
  GeneratorReport gens = generator_degrees(algebra, action, cap, noether_bound(order));
  const std::size_t beta = std::max<std::size_t>(gens.beta, 1);

  VerificationReport report;
  report.target = "lemma-2-8";
  report.verified_up_to = cap;
  report.parameters["beta_G_V"] = static_cast<std::int64_t>(beta);
  report.parameters["group_order"] = static_cast<std::int64_t>(order);
  if (auto b = known_beta(action.group())) report.parameters["beta_G"] = static_cast<std::int64_t>(*b);

  const auto xs = variables(d);
  std::vector<NCPoly> hilbert;  // basis of the Hilbert ideal in the previous degree
  for (std::size_t n = 1; n <= cap; ++n) {
    DegreeSpan span(d, n);
    for (const auto& p : products(algebra, xs, hilbert)) span.insert(p);
    for (const auto& f : invariant_basis(algebra, action, n)) span.insert(f);
    hilbert = span.basis();
    if (n < beta) continue;
    DegreeCheck check{n, algebra.component(n).quotient_dimension(), span.rank()};
    report.holds = report.holds && check.holds();
    report.degrees.push_back(check);
  }
  return report;
}

VerificationReport check_corollary_squares(const RelativelyFreeAlgebra& algebra,
                                           const GroupAction& action, std::size_t cap) {
  check_dimension(algebra, action);
  const std::size_t d = algebra.dimension();
  NilpotencyResult nil = nilpotency_class_up_to(algebra, cap, algebra.options().limits.max_p);
  if (!nil.ell) {
    throw PreconditionError("nilpotency class of the commutator ideal not determined up to degree " +
                            std::to_string(cap));
  }
  const std::uint64_t beta_g = known_beta(action.group()).value_or(action.group().order());
  const std::size_t exponent = 2 * beta_g * *nil.ell;

  VerificationReport report;
  report.target = "corollary-squares";
  report.verified_up_to = cap;
  report.parameters["ell"] = *nil.ell;
  report.parameters["beta_G"] = static_cast<std::int64_t>(beta_g);
  report.parameters["exponent"] = static_cast<std::int64_t>(exponent);
  if (exponent > cap) return report;

  const auto xs = variables(d);
  std::vector<std::vector<NCPoly>> inv(cap + 1);
  for (std::size_t n = 1; n <= cap; ++n) inv[n] = invariant_basis(algebra, action, n);
  std::vector<NCPoly> ideal;  // F (F_+^G)^2 F in the previous degree
  for (std::size_t n = 2; n <= cap; ++n) {
    DegreeSpan span(d, n);
    for (const auto& p : products(algebra, xs, ideal)) span.insert(p);
    for (const auto& p : products(algebra, ideal, xs)) span.insert(p);
    for (std::size_t k = 1; k < n; ++k) {
      for (const auto& p : products(algebra, inv[k], inv[n - k])) span.insert(p);
    }
    ideal = span.basis();
    if (n < exponent) continue;
    DegreeCheck check{n, algebra.component(n).quotient_dimension(), span.rank()};
    report.holds = report.holds && check.holds();
    report.degrees.push_back(check);
  }
  return report;
}

VerificationReport check_lemma_3_1(const RelativelyFreeAlgebra& algebra, unsigned p,
                                   std::size_t cap, const std::optional<SpecialIdentity>& shape) {
  if (p == 0) throw UsageError("check_lemma_3_1 needs p >= 1");
  if (p >= 2 && !shape) {
    throw PreconditionError("check_lemma_3_1 with p >= 2 needs an identity x2 x1^(n+1) x3 + x1 h1 + h2 x1");
  }
  const std::size_t d = algebra.dimension();
  VerificationReport report;
  report.target = "lemma-3-1";
  report.verified_up_to = cap;
  report.parameters["p"] = p;

  // Inner blocks: a_i <= n and |a| <= nu - 1, nu = nu(n + 1) (or an upper bound).
  std::size_t max_entry = 0;
  std::size_t max_total = 0;
  if (shape) {
    max_entry = shape->n;
    auto nu = nu_upper(shape->n + 1);
    max_total = nu.value - 1;
    report.parameters["n"] = shape->n;
    report.parameters["nu"] = static_cast<std::int64_t>(nu.value);
  }

  std::vector<std::pair<Letter, Letter>> pairs;
  for (Letter i = 1; i <= d; ++i) {
    for (Letter j = i + 1; j <= d; ++j) pairs.emplace_back(i, j);
  }

  for (std::size_t n = 2 * static_cast<std::size_t>(p); n <= cap; ++n) {
    const std::size_t full = commutator_power_dimension(algebra, p, n);
    DegreeSpan span(d, n);
    for (const auto& q : commutator_power_component(algebra, p + 1, n)) span.insert(q);

    std::vector<NCPoly> candidates;
    std::vector<Word> blocks(p + 1);
    std::vector<std::size_t> chosen(p);
    const std::size_t free_letters = n - 2 * p;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t q, std::size_t left) {
      if (q == p) {
        // The last block takes the remaining letters.
        std::vector<std::vector<int>> last;
        std::vector<int> cur;
        exponent_vectors(d, left, cur, last);
        for (const auto& a : last) {
          blocks[p] = monomial(a);
          std::function<void(std::size_t)> brackets = [&](std::size_t k) {
            if (k == p) {
              NCPoly w(blocks[0]);
              for (std::size_t t = 0; t < p; ++t) {
                w = w * commutator(NCPoly::variable(pairs[chosen[t]].first),
                                   NCPoly::variable(pairs[chosen[t]].second));
                w = w * NCPoly(blocks[t + 1]);
              }
              candidates.push_back(std::move(w));
              return;
            }
            for (std::size_t c = 0; c < pairs.size(); ++c) {
              chosen[k] = c;
              brackets(k + 1);
            }
          };
          brackets(0);
        }
        return;
      }
      const bool inner = q >= 1;
      const std::size_t limit = inner ? std::min(left, max_total) : left;
      for (std::size_t s = 0; s <= limit; ++s) {
        std::vector<std::vector<int>> vecs;
        std::vector<int> cur;
        exponent_vectors(d, s, cur, vecs);
        for (const auto& a : vecs) {
          if (inner && std::any_of(a.begin(), a.end(), [&](int x) {
                return static_cast<std::size_t>(x) > max_entry;
              })) {
            continue;
          }
          blocks[q] = monomial(a);
          fill(q + 1, left - s);
        }
      }
    };
    if (!pairs.empty()) fill(0, free_letters);

    std::vector<NCPoly> reduced(candidates.size());
    parallel_for(candidates.size(), algebra.options().threads,
                 [&](std::size_t k) { reduced[k] = algebra.normal_form(candidates[k]); });
    for (const auto& r : reduced) span.insert(r);

    DegreeCheck check{n, full, span.rank()};
    report.holds = report.holds && check.holds();
    report.degrees.push_back(check);
  }
  return report;
}

VerificationReport check_invariant_subword(std::uint64_t seed, std::size_t instances,
                                           unsigned max_order, unsigned max_length) {
  if (max_order < 2 || max_length < 1) throw UsageError("max_order >= 2 and max_length >= 1 required");
  std::mt19937_64 rng(seed);
  auto draw = [&](unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(rng() % (hi - lo + 1));
  };
  VerificationReport report;
  report.target = "invariant-subword";
  std::int64_t failures = 0;
  for (std::size_t t = 0; t < instances; ++t) {
    const unsigned m = draw(2, max_order);
    const unsigned d = draw(1, 4);
    std::vector<int> chi(d);
    for (auto& c : chi) c = static_cast<int>(draw(0, m - 1));
    MonomialAction action = MonomialAction::cyclic(m, chi);
    std::vector<Word> words(m);
    for (auto& w : words) {
      std::vector<Letter> letters(draw(1, max_length));
      for (auto& l : letters) l = static_cast<Letter>(draw(1, d));
      w = Word(std::move(letters));
    }
    auto [i, j] = invariant_subword(words, action);
    std::vector<Letter> sub;
    for (std::size_t k = i; k < j; ++k) { auto l = words[k].letters(); sub.insert(sub.end(), l.begin(), l.end()); }
    if (i >= j || j > m || !action.is_invariant(Word(std::move(sub)))) ++failures;
  }
  report.holds = failures == 0;
  report.parameters["instances"] = static_cast<std::int64_t>(instances);
  report.parameters["failures"] = failures;
  report.parameters["seed"] = static_cast<std::int64_t>(seed);
  return report;
}

}  // namespace ncinv
