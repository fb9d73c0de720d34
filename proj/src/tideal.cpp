#include "ncinv/tideal.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

#include "ncinv/errors.hpp"

namespace ncinv {

namespace {

// Appends every complete linearization of the word w (coefficient c) to out.
// Occurrences of x_i are matched bijectively with the fresh block of x_i.
void linearize_word(const Word& w, const Rational& c, const std::vector<int>& offset,
                    const std::vector<int>& count, NCPoly& out) {
  const std::size_t n = w.degree();
  std::vector<std::vector<std::size_t>> positions(count.size());
  for (std::size_t t = 0; t < n; ++t) positions[w[t] - 1].push_back(t);

  std::vector<std::vector<Letter>> perms(count.size());
  for (std::size_t i = 0; i < count.size(); ++i) {
    for (int k = 0; k < count[i]; ++k) perms[i].push_back(static_cast<Letter>(offset[i] + k + 1));
  }
  std::vector<Letter> letters(n);
  // Odometer over the per-variable permutations.
  while (true) {
    for (std::size_t i = 0; i < count.size(); ++i) {
      for (std::size_t k = 0; k < positions[i].size(); ++k) letters[positions[i][k]] = perms[i][k];
    }
    out.add_term(Word(letters), c);
    std::size_t i = 0;
    while (i < perms.size() && !std::next_permutation(perms[i].begin(), perms[i].end())) ++i;
    if (i == perms.size()) break;
  }
}

NCPoly normalize_leading(NCPoly p) {
  Rational lead = p.coefficient(p.leading_word());
  p *= Rational(1) / lead;
  return p;
}

std::uint64_t multinomial(const std::vector<int>& parts) {
  // Saturating; exact below 2^63.
  std::uint64_t result = 1;
  int total = 0;
  for (int part : parts) {
    for (int k = 1; k <= part; ++k) {
      ++total;
      std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(k));
      std::uint64_t num = result / g;
      std::uint64_t den = static_cast<std::uint64_t>(k) / g;
      if (num > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(total)) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      result = num * static_cast<std::uint64_t>(total) / den;
    }
  }
  return result;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Multilinear generator prepared for substitution of words.
struct PreparedGenerator {
  std::size_t arity;
  std::vector<std::pair<std::vector<Letter>, Rational>> terms;  // 0-based letters
};

}  // namespace

std::vector<NCPoly> multilinearize(const NCPoly& f) {
  std::vector<NCPoly> out;
  const std::size_t d = f.max_letter();
  for (const auto& [md, part] : f.multihomogeneous_components(d)) {
    std::vector<int> offset(d, 0);
    int next = 0;
    for (std::size_t i = 0; i < d; ++i) {
      offset[i] = next;
      next += md[i];
    }
    NCPoly lin;
    for (const auto& [w, c] : part.terms()) linearize_word(w, c, offset, md, lin);
    if (!lin.is_zero()) out.push_back(std::move(lin));
  }
  return out;
}

Variety::Variety(std::vector<NCPoly> identities, bool unitary)
    : identities_(std::move(identities)), unitary_(unitary) {
  std::set<NCPoly> seen;
  for (const auto& f : identities_) {
    if (!unitary_ && !ncinv::is_zero(f.constant_term())) {
      throw UsageError("identity with a constant term in a nonunitary variety");
    }
    for (auto& g : multilinearize(f)) {
      const std::size_t k = static_cast<std::size_t>(g.degree());
      if (!unitary_ || k == 0) {
        seen.insert(normalize_leading(std::move(g)));
        continue;
      }
      if (k > 16) throw ResourceError("identity of too high degree", k);
      // Every specialization of a subset of the variables to 1.
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<NCPoly> images(k);
        Letter next = 1;
        for (std::size_t i = 0; i < k; ++i) {
          images[i] = (mask >> i) & 1u ? NCPoly::constant(1) : NCPoly::variable(next++);
        }
        NCPoly s = substitute(g, images);
        if (!s.is_zero()) seen.insert(normalize_leading(std::move(s)));
      }
    }
  }
  generators_.assign(seen.begin(), seen.end());
}

Variety Variety::free_algebra(bool unitary) { return Variety({}, unitary); }

Variety Variety::commutative() {
  return Variety({commutator(NCPoly::variable(1), NCPoly::variable(2))}, true);
}

std::uint32_t word_index(const Word& w, std::size_t d) {
  std::uint64_t index = 0;
  for (Letter l : w.letters()) index = index * d + (l - 1);
  return static_cast<std::uint32_t>(index);
}

Word word_at(std::uint32_t index, std::size_t d, std::size_t n) {
  std::vector<Letter> letters(n);
  for (std::size_t t = n; t-- > 0;) {
    letters[t] = static_cast<Letter>(index % d + 1);
    index = static_cast<std::uint32_t>(index / d);
  }
  return Word(std::move(letters));
}

MultidegreeComponent::MultidegreeComponent(std::vector<int> multidegree, const Variety& variety,
                                           const Limits& limits)
    : multidegree_(std::move(multidegree)), degree_(0) {
  const std::size_t d = multidegree_.size();
  for (int a : multidegree_) degree_ += static_cast<std::size_t>(a);
  const std::size_t n = degree_;

  double space = 1;
  for (std::size_t t = 0; t < n; ++t) space *= static_cast<double>(d);
  if (space > static_cast<double>(std::numeric_limits<std::uint32_t>::max())) {
    throw ResourceError("degree component too large", static_cast<std::size_t>(space));
  }
  const std::uint64_t size = multinomial(multidegree_);
  if (size > limits.max_component_words) {
    throw ResourceError("multidegree component exceeds max_component_words",
                        static_cast<std::size_t>(size));
  }

  words_ = words_of_multidegree(multidegree_);
  keys_.reserve(words_.size());
  for (const auto& w : words_) keys_.push_back(word_index(w, d));
  ideal_ = EchelonBasis(words_.size());

  std::vector<PreparedGenerator> gens;
  std::uint64_t elements = 0;
  for (const auto& g : variety.generators()) {
    PreparedGenerator pg{static_cast<std::size_t>(g.degree()), {}};
    if (pg.arity > n) continue;
    for (const auto& [w, c] : g.terms()) {
      std::vector<Letter> letters(w.letters().begin(), w.letters().end());
      for (auto& l : letters) --l;
      pg.terms.emplace_back(std::move(letters), c);
    }
    elements += words_.size() * binomial(n + 1, pg.arity + 1);
    gens.push_back(std::move(pg));
  }
  if (elements > limits.max_spanning_elements) {
    throw ResourceError("spanning set exceeds max_spanning_elements",
                        static_cast<std::size_t>(elements));
  }

  std::vector<std::size_t> cut;
  std::vector<Letter> buffer(n);
  std::vector<SparseEntry> entries;
  for (const auto& g : gens) {
    const std::size_t k = g.arity;
    for (const auto& target : words_) {
      if (ideal_.rank() == words_.size()) return;
      std::span<const Letter> W = target.letters();
      // Cut points c_0 < c_1 < ... < c_k in [0, n]: prefix W[0, c_0), argument
      // i is W[c_(i-1), c_i), suffix W[c_k, n).
      cut.resize(k + 1);
      for (std::size_t i = 0; i <= k; ++i) cut[i] = i;
      while (true) {
        entries.clear();
        for (const auto& [perm, coef] : g.terms) {
          std::size_t pos = 0;
          for (std::size_t t = 0; t < cut[0]; ++t) buffer[pos++] = W[t];
          for (Letter arg : perm) {
            for (std::size_t t = cut[arg]; t < cut[arg + 1]; ++t) buffer[pos++] = W[t];
          }
          for (std::size_t t = cut[k]; t < n; ++t) buffer[pos++] = W[t];
          std::uint64_t key = 0;
          for (Letter l : buffer) key = key * d + (l - 1);
          auto it = std::lower_bound(keys_.begin(), keys_.end(), static_cast<std::uint32_t>(key));
          entries.emplace_back(static_cast<std::uint32_t>(it - keys_.begin()), coef);
        }
        ideal_.insert(make_sparse(std::move(entries)));
        entries = {};
        // Next combination.
        std::size_t i = k + 1;
        while (i > 0 && cut[i - 1] == n - (k + 1 - i)) --i;
        if (i == 0) break;
        ++cut[i - 1];
        for (std::size_t j = i; j <= k; ++j) cut[j] = cut[j - 1] + 1;
      }
    }
  }
}

std::optional<std::uint32_t> MultidegreeComponent::column(const Word& w) const {
  if (w.degree() != degree_ || w.max_letter() > multidegree_.size()) return std::nullopt;
  std::uint32_t key = word_index(w, multidegree_.size());
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - keys_.begin());
}

std::vector<Word> MultidegreeComponent::normal_words() const {
  std::vector<Word> out;
  for (std::uint32_t c = 0; c < words_.size(); ++c) {
    if (!ideal_.is_pivot(c)) out.push_back(words_[c]);
  }
  return out;
}

std::vector<NCPoly> MultidegreeComponent::ideal_basis() const {
  std::vector<NCPoly> out;
  for (const auto& row : ideal_.reduced_rows()) out.push_back(to_poly(row));
  return out;
}

SparseVector MultidegreeComponent::to_vector(const NCPoly& p) const {
  std::vector<SparseEntry> entries;
  entries.reserve(p.size());
  for (const auto& [w, c] : p.terms()) {
    auto col = column(w);
    if (!col) throw UsageError("word outside the multidegree component");
    entries.emplace_back(*col, c);
  }
  return make_sparse(std::move(entries));
}

NCPoly MultidegreeComponent::to_poly(const SparseVector& v) const {
  NCPoly out;
  for (const auto& [col, c] : v) out.add_term(words_[col], c);
  return out;
}

DegreeComponent::DegreeComponent(std::size_t d, std::size_t n,
                                 std::vector<std::shared_ptr<const MultidegreeComponent>> blocks)
    : d_(d), n_(n), blocks_(std::move(blocks)) {}

std::size_t DegreeComponent::ideal_dimension() const {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b->ideal_dimension();
  return total;
}

std::size_t DegreeComponent::quotient_dimension() const {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b->quotient_dimension();
  return total;
}

std::vector<NCPoly> DegreeComponent::ideal_basis() const {
  std::vector<NCPoly> out;
  for (const auto& b : blocks_) {
    auto part = b->ideal_basis();
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Word> DegreeComponent::normal_words() const {
  std::vector<Word> out;
  for (const auto& b : blocks_) {
    auto part = b->normal_words();
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const MultidegreeComponent& DegreeComponent::block_of(const Word& w) const {
  if (w.max_letter() > d_) throw UsageError("variable outside the component's dimension");
  auto md = w.multidegree(d_);
  for (const auto& b : blocks_) {
    if (b->multidegree() == md) return *b;
  }
  throw InternalError("missing multidegree block");
}

NCPoly DegreeComponent::normal_form(const NCPoly& p) const {
  if (p.is_zero()) return p;
  if (!p.is_homogeneous() || static_cast<std::size_t>(p.degree()) != n_) {
    throw UsageError("normal_form: polynomial is not homogeneous of degree " +
                     std::to_string(n_));
  }
  std::map<const MultidegreeComponent*, NCPoly> parts;
  for (const auto& [w, c] : p.terms()) parts[&block_of(w)].add_term(w, c);
  NCPoly out;
  for (const auto& [block, part] : parts) out += block->normal_form(part);
  return out;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

RelativelyFreeAlgebra::RelativelyFreeAlgebra(Variety variety, std::size_t d,
                                             ComputeOptions options)
    : variety_(std::move(variety)), d_(d), options_(options) {
  if (d == 0) throw UsageError("dimension must be positive");
}

void RelativelyFreeAlgebra::build_blocks(const std::vector<std::vector<int>>& multidegrees) const {
  std::vector<std::vector<int>> missing;
  {
    std::lock_guard lock(mutex_);
    for (const auto& md : multidegrees) {
      if (!cache_.contains(md)) missing.push_back(md);
    }
  }
  if (missing.empty()) return;
  std::vector<std::shared_ptr<const MultidegreeComponent>> built(missing.size());
  parallel_for(missing.size(), options_.threads, [&](std::size_t i) {
    built[i] = std::make_shared<const MultidegreeComponent>(missing[i], variety_, options_.limits);
  });
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < missing.size(); ++i) cache_.emplace(missing[i], built[i]);
}

std::shared_ptr<const MultidegreeComponent> RelativelyFreeAlgebra::block(
    std::span<const int> multidegree) const {
  if (multidegree.size() != d_) throw UsageError("multidegree length differs from dimension");
  std::vector<int> md(multidegree.begin(), multidegree.end());
  std::size_t total = 0;
  for (int a : md) total += static_cast<std::size_t>(a);
  if (total > options_.limits.max_degree) {
    throw ResourceError("degree exceeds max_degree", total);
  }
  build_blocks({md});
  std::lock_guard lock(mutex_);
  return cache_.at(md);
}

DegreeComponent RelativelyFreeAlgebra::component(std::size_t n) const {
  if (n > options_.limits.max_degree) throw ResourceError("degree exceeds max_degree", n);
  auto mds = multidegrees_of_degree(d_, n);
  build_blocks(mds);
  std::vector<std::shared_ptr<const MultidegreeComponent>> blocks;
  blocks.reserve(mds.size());
  std::lock_guard lock(mutex_);
  for (const auto& md : mds) blocks.push_back(cache_.at(md));
  return DegreeComponent(d_, n, std::move(blocks));
}

NCPoly RelativelyFreeAlgebra::normal_form(const NCPoly& p) const {
  if (p.max_letter() > d_) throw UsageError("variable outside the algebra's dimension");
  NCPoly out;
  for (const auto& [md, part] : p.multihomogeneous_components(d_)) {
    out += block(md)->normal_form(part);
  }
  return out;
}

}  // namespace ncinv
