#include "ncinv/errors.hpp"
#include "ncinv/tideal.hpp"

namespace ncinv {

namespace {

Word x1_power(unsigned e) { return Word(std::vector<Letter>(e, 1)); }

Word shape_word(Letter first, unsigned i, Letter second, unsigned middle, unsigned j) {
  Word w = x1_power(i);
  w.push_back(first);
  w.append(x1_power(middle));
  w.push_back(second);
  w.append(x1_power(j));
  return w;
}

std::vector<int> shape_multidegree(const RelativelyFreeAlgebra& algebra, unsigned a) {
  if (algebra.dimension() < 3) throw UsageError("identity shapes need dimension >= 3");
  std::vector<int> md(algebra.dimension(), 0);
  md[0] = static_cast<int>(a);
  md[1] = 1;
  md[2] = 1;
  return md;
}

}  // namespace

NCPoly IdentityShape::polynomial() const {
  NCPoly f(shape_word(2, 0, 3, n, 0));
  f.add_term(shape_word(3, 0, 2, n, 0), gamma);
  for (const auto& [ij, c] : alpha) {
    f.add_term(shape_word(2, ij.first, 3, n - ij.first - ij.second, ij.second), c);
  }
  for (const auto& [ij, c] : beta) {
    f.add_term(shape_word(3, ij.first, 2, n - ij.first - ij.second, ij.second), c);
  }
  return f;
}

SpecialIdentity split_special_identity(const NCPoly& h, unsigned n) {
  const Word lead = shape_word(2, 0, 3, n + 1, 0);
  if (h.coefficient(lead) != 1) throw UsageError("identity lacks the term x2 x1^(n+1) x3");
  SpecialIdentity out{n, h, {}, {}};
  for (const auto& [w, c] : h.terms()) {
    if (w == lead) continue;
    if (w.starts_with(1)) {
      out.h1.add_term(w.subword(1, w.degree() - 1), c);
    } else if (w.ends_with(1)) {
      out.h2.add_term(w.subword(0, w.degree() - 1), c);
    } else {
      throw UsageError("term neither starts nor ends with x1");
    }
  }
  return out;
}

std::optional<IdentityShape> find_identity_shape_viii(const RelativelyFreeAlgebra& algebra,
                                                      unsigned n_max) {
  for (unsigned n = 2; n <= n_max; ++n) {
    auto block = algebra.block(shape_multidegree(algebra, n));
    auto nf = [&](const Word& w) { return block->reduce(block->to_vector(NCPoly(w))); };

    std::vector<std::pair<unsigned, unsigned>> keys;
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; i + j <= n; ++j) {
        if (i + j > 0) keys.emplace_back(i, j);
      }
    }
    std::vector<SparseVector> unknowns;
    unknowns.push_back(nf(shape_word(3, 0, 2, n, 0)));
    for (const auto& [i, j] : keys) unknowns.push_back(nf(shape_word(2, i, 3, n - i - j, j)));
    for (const auto& [i, j] : keys) unknowns.push_back(nf(shape_word(3, i, 2, n - i - j, j)));
    SparseVector target = nf(shape_word(2, 0, 3, n, 0));
    for (auto& e : target) e.second = -e.second;

    auto solution = solve_combination(unknowns, target);
    if (!solution) continue;
    IdentityShape shape;
    shape.n = n;
    shape.gamma = (*solution)[0];
    for (std::size_t k = 0; k < keys.size(); ++k) {
      if (!ncinv::is_zero((*solution)[1 + k])) shape.alpha[keys[k]] = (*solution)[1 + k];
      if (!ncinv::is_zero((*solution)[1 + keys.size() + k])) {
        shape.beta[keys[k]] = (*solution)[1 + keys.size() + k];
      }
    }
    if (!block->normal_form(shape.polynomial()).is_zero()) {
      throw InternalError("identity shape failed verification");
    }
    return shape;
  }
  return std::nullopt;
}

std::optional<SpecialIdentity> find_identity_shape_3_2(const RelativelyFreeAlgebra& algebra,
                                                       unsigned n_max) {
  for (unsigned n = 0; n <= n_max; ++n) {
    auto block = algebra.block(shape_multidegree(algebra, n + 1));
    std::vector<Word> words;
    std::vector<SparseVector> unknowns;
    for (const Word& w : block->words()) {
      if (w.starts_with(1) || w.ends_with(1)) {
        words.push_back(w);
        unknowns.push_back(block->reduce(block->to_vector(NCPoly(w))));
      }
    }
    const Word lead = shape_word(2, 0, 3, n + 1, 0);
    SparseVector target = block->reduce(block->to_vector(NCPoly(lead)));
    for (auto& e : target) e.second = -e.second;

    auto solution = solve_combination(unknowns, target);
    if (!solution) continue;
    NCPoly h(lead);
    for (std::size_t k = 0; k < words.size(); ++k) h.add_term(words[k], (*solution)[k]);
    if (!block->normal_form(h).is_zero()) {
      throw InternalError("special identity failed verification");
    }
    return split_special_identity(h, n);
  }
  return std::nullopt;
}

SpecialIdentity special_identity_from_shape(const IdentityShape& shape) {
  std::vector<NCPoly> images = {NCPoly::variable(1), NCPoly::variable(2),
                                NCPoly::variable(1) * NCPoly::variable(3)};
  return split_special_identity(substitute(shape.polynomial(), images), shape.n);
}

}  // namespace ncinv
