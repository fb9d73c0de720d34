#include "ncinv/action.hpp"

#include <algorithm>
#include <map>

#include "ncinv/errors.hpp"

namespace ncinv {

namespace {

unsigned mod(long long a, unsigned m) {
  long long r = a % static_cast<long long>(m);
  return static_cast<unsigned>(r < 0 ? r + m : r);
}

using Matrix = MatrixAction::Matrix;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (ncinv::is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

MonomialAction::MonomialAction(FiniteGroup group, std::vector<std::vector<int>> characters)
    : group_(std::move(group)) {
  if (!group_.cyclic_factors()) {
    throw UsageError("monomial actions need a group given as a product of cyclic groups");
  }
  const auto& m = *group_.cyclic_factors();
  for (std::size_t i = 0; i < characters.size(); ++i) {
    if (characters[i].size() != m.size()) {
      throw UsageError("character of x" + std::to_string(i + 1) + " has " +
                       std::to_string(characters[i].size()) + " entries, expected " +
                       std::to_string(m.size()));
    }
    std::vector<unsigned> chi(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) chi[j] = mod(characters[i][j], m[j]);
    characters_.push_back(std::move(chi));
  }
  if (characters_.empty()) throw UsageError("monomial action on zero variables");
}

MonomialAction MonomialAction::cyclic(unsigned m, const std::vector<int>& chi) {
  std::vector<std::vector<int>> chars;
  for (int c : chi) chars.push_back({c});
  return MonomialAction(FiniteGroup::cyclic(m), std::move(chars));
}

std::vector<unsigned> MonomialAction::exponent_sums(const Word& w) const {
  if (w.max_letter() > dim()) throw UsageError("word uses a variable outside the action");
  std::vector<int> md = w.multidegree(dim());
  return exponent_sums(md);
}

std::vector<unsigned> MonomialAction::exponent_sums(std::span<const int> multidegree) const {
  const auto& m = orders();
  std::vector<unsigned> s(m.size(), 0);
  for (std::size_t i = 0; i < multidegree.size() && i < dim(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      s[j] = mod(static_cast<long long>(s[j]) +
                     static_cast<long long>(multidegree[i]) * characters_[i][j],
                 m[j]);
    }
  }
  return s;
}

bool MonomialAction::is_invariant(const Word& w) const {
  auto s = exponent_sums(w);
  return std::all_of(s.begin(), s.end(), [](unsigned x) { return x == 0; });
}

bool MonomialAction::is_invariant_multidegree(std::span<const int> multidegree) const {
  auto s = exponent_sums(multidegree);
  return std::all_of(s.begin(), s.end(), [](unsigned x) { return x == 0; });
}

Rational MonomialAction::phase(FiniteGroup::Element g, const Word& w) const {
  auto e = group_.exponents(g);
  auto s = exponent_sums(w);
  const auto& m = orders();
  Rational total = 0;
  for (std::size_t j = 0; j < m.size(); ++j) total += Rational(e[j] * s[j] % m[j], m[j]);
  total.canonicalize();
  while (total >= 1) total -= 1;
  return total;
}

NCPoly MonomialAction::act_on_word(FiniteGroup::Element g, const Word& w) const {
  Rational ph = phase(g, w);
  if (ph == 0) return NCPoly(w);
  if (ph == Rational(1, 2)) return NCPoly(w, -1);
  throw UsageError("monomial action scalar exp(2 pi i " + to_string(ph) +
                   ") is not rational; use invariance tests instead");
}

NCPoly MonomialAction::act(FiniteGroup::Element g, const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out += act_on_word(g, w) * c;
  return out;
}

MatrixAction::MatrixAction(FiniteGroup group, std::vector<Matrix> matrices)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
  if (matrices_.size() != group_.order()) {
    throw UsageError("need one matrix per group element: got " + std::to_string(matrices_.size()) +
                     ", group order " + std::to_string(group_.order()));
  }
  dim_ = matrices_.front().size();
  if (dim_ == 0) throw UsageError("matrices must be nonempty");
  for (const auto& m : matrices_) {
    if (m.size() != dim_) throw UsageError("matrices have different sizes");
    for (const auto& row : m) {
      if (row.size() != dim_) throw UsageError("matrix is not square");
    }
  }
  if (matrices_[group_.identity()] != identity_matrix(dim_)) {
    throw UsageError("identity element is not represented by the identity matrix");
  }
  for (std::size_t a = 0; a < group_.order(); ++a) {
    for (std::size_t b = 0; b < group_.order(); ++b) {
      if (multiply(matrices_[a], matrices_[b]) != matrices_[group_.multiply(a, b)]) {
        throw UsageError("matrices do not define a homomorphism (elements " + std::to_string(a) +
                         ", " + std::to_string(b) + ")");
      }
    }
  }
  images_.resize(group_.order());
  for (std::size_t g = 0; g < group_.order(); ++g) {
    for (std::size_t j = 0; j < dim_; ++j) {
      NCPoly img;
      for (std::size_t i = 0; i < dim_; ++i) {
        img.add_term(Word::letter(static_cast<Letter>(i + 1)), matrices_[g][i][j]);
      }
      images_[g].push_back(std::move(img));
    }
  }
}

NCPoly MatrixAction::image_of_variable(FiniteGroup::Element g, std::size_t j) const {
  return images_[g].at(j - 1);
}

NCPoly MatrixAction::act_on_word(FiniteGroup::Element g, const Word& w) const {
  if (w.max_letter() > dim_) throw UsageError("word uses a variable outside the action");
  return substitute(NCPoly(w), images_[g]);
}

NCPoly MatrixAction::act(FiniteGroup::Element g, const NCPoly& p) const {
  if (p.max_letter() > dim_) throw UsageError("polynomial uses a variable outside the action");
  return substitute(p, images_[g]);
}

MatrixAction regular_action(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<std::vector<std::size_t>> perms(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) perms[g][h] = group.multiply(g, h);
  }
  return permutation_action(group, perms);
}

MatrixAction permutation_action(const FiniteGroup& group,
                                const std::vector<std::vector<std::size_t>>& perms) {
  if (perms.size() != group.order()) throw UsageError("need one permutation per group element");
  const std::size_t d = perms.front().size();
  std::vector<Matrix> mats;
  for (const auto& p : perms) {
    if (p.size() != d) throw UsageError("permutations have different sizes");
    Matrix m(d, std::vector<Rational>(d, Rational(0)));
    std::vector<bool> hit(d, false);
    for (std::size_t j = 0; j < d; ++j) {
      if (p[j] >= d || hit[p[j]]) throw UsageError("invalid permutation");
      hit[p[j]] = true;
      m[p[j]][j] = 1;
    }
    mats.push_back(std::move(m));
  }
  return MatrixAction(group, std::move(mats));
}

MatrixAction cyclic_permutation_action(unsigned m, const std::vector<std::size_t>& generator) {
  FiniteGroup group = FiniteGroup::cyclic(m);
  const std::size_t d = generator.size();
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> current(d);
  for (std::size_t j = 0; j < d; ++j) current[j] = j;
  for (unsigned k = 0; k < m; ++k) {
    perms.push_back(current);
    for (auto& x : current) {
      if (x >= d) throw UsageError("invalid permutation");
      x = generator[x];
    }
  }
  if (current != perms.front()) {
    throw UsageError("permutation order does not divide the group order " + std::to_string(m));
  }
  return permutation_action(group, perms);
}

std::size_t GroupAction::dim() const {
  return std::visit([](const auto& a) { return a.dim(); }, action_);
}

const FiniteGroup& GroupAction::group() const {
  return std::visit([](const auto& a) -> const FiniteGroup& { return a.group(); }, action_);
}

const MonomialAction& GroupAction::monomial() const {
  if (!is_monomial()) throw UsageError("operation requires a monomial action");
  return std::get<MonomialAction>(action_);
}

const MatrixAction& GroupAction::matrix() const {
  if (is_monomial()) throw UsageError("operation requires a matrix action");
  return std::get<MatrixAction>(action_);
}

NCPoly GroupAction::act_on_word(FiniteGroup::Element g, const Word& w) const {
  return std::visit([&](const auto& a) { return a.act_on_word(g, w); }, action_);
}

NCPoly GroupAction::act(FiniteGroup::Element g, const NCPoly& p) const {
  return std::visit([&](const auto& a) { return a.act(g, p); }, action_);
}

SparseVector word_coordinates(const NCPoly& p, std::size_t d) {
  std::vector<SparseEntry> entries;
  entries.reserve(p.size());
  for (const auto& [w, c] : p.terms()) entries.emplace_back(word_index(w, d), c);
  return make_sparse(std::move(entries));
}

NCPoly from_word_coordinates(const SparseVector& v, std::size_t d, std::size_t n) {
  NCPoly out;
  for (const auto& [col, c] : v) out.add_term(word_at(col, d, n), c);
  return out;
}

std::vector<NCPoly> reynolds_operator(const MatrixAction& action, const DegreeComponent& component,
                                      unsigned threads) {
  if (action.dim() != component.dimension()) {
    throw UsageError("action dimension differs from the algebra dimension");
  }
  const std::vector<Word> words = component.normal_words();
  std::vector<NCPoly> columns(words.size());
  const Rational scale(1, static_cast<unsigned long>(action.group().order()));
  parallel_for(words.size(), threads, [&](std::size_t k) {
    NCPoly sum;
    for (std::size_t g = 0; g < action.group().order(); ++g) sum += action.act_on_word(g, words[k]);
    columns[k] = component.normal_form(sum) * scale;
  });
  return columns;
}

std::vector<NCPoly> row_reduce(const std::vector<NCPoly>& polys) {
  std::map<Word, std::uint32_t> index;
  for (const auto& p : polys) {
    for (const auto& [w, c] : p.terms()) index.emplace(w, 0);
  }
  std::vector<Word> words;
  for (auto& [w, col] : index) {
    col = static_cast<std::uint32_t>(words.size());
    words.push_back(w);
  }
  EchelonBasis ech(words.size());
  for (const auto& p : polys) {
    std::vector<SparseEntry> entries;
    for (const auto& [w, c] : p.terms()) entries.emplace_back(index.at(w), c);
    ech.insert(make_sparse(std::move(entries)));
  }
  auto rows = ech.reduced_rows();
  std::vector<NCPoly> out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    NCPoly p;
    for (const auto& [col, c] : *it) p.add_term(words[col], c);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<NCPoly> reynolds_basis(const GroupAction& action, const DegreeComponent& component,
                                   unsigned threads) {
  if (action.dim() != component.dimension()) {
    throw UsageError("action dimension differs from the algebra dimension");
  }
  if (action.is_monomial()) {
    // Monomial actions scale each multidegree block by a single character,
    // so the invariants are spanned by the invariant normal-form words.
    std::vector<NCPoly> out;
    for (const auto& block : component.blocks()) {
      if (!action.monomial().is_invariant_multidegree(block->multidegree())) continue;
      for (const auto& w : block->normal_words()) out.emplace_back(w);
    }
    std::sort(out.begin(), out.end(),
              [](const NCPoly& a, const NCPoly& b) { return a.leading_word() < b.leading_word(); });
    return out;
  }
  return row_reduce(reynolds_operator(action.matrix(), component, threads));
}

std::vector<NCPoly> reynolds_basis(const GroupAction& action, std::size_t n, unsigned threads) {
  ComputeOptions options;
  options.threads = threads;
  RelativelyFreeAlgebra free(Variety::free_algebra(), action.dim(), options);
  return reynolds_basis(action, free.component(n), threads);
}

}  // namespace ncinv
