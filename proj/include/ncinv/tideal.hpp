#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "ncinv/linalg.hpp"
#include "ncinv/ncpoly.hpp"

namespace ncinv {

struct Limits {
  std::size_t max_component_words = 1u << 20;       // words in one multidegree block
  std::size_t max_spanning_elements = 50'000'000;   // spanning elements per block
  unsigned nh_max_m = 7;
  unsigned max_p = 8;
  unsigned max_degree = 24;
};

struct ComputeOptions {
  Limits limits;
  unsigned threads = 1;
};

// Complete linearization of every multihomogeneous component of f. Each
// output is multilinear in x1..xk for its own k.
std::vector<NCPoly> multilinearize(const NCPoly& f);

// A variety given by a finite set of identities.
class Variety {
 public:
  explicit Variety(std::vector<NCPoly> identities, bool unitary = true);

  static Variety free_algebra(bool unitary = true);
  static Variety commutative();

  const std::vector<NCPoly>& identities() const { return identities_; }
  // Multilinear generators of the T-ideal. In unitary mode this also holds
  // every specialization of a variable to 1, renumbered.
  const std::vector<NCPoly>& generators() const { return generators_; }
  bool unitary() const { return unitary_; }
  bool is_free() const { return generators_.empty(); }

 private:
  std::vector<NCPoly> identities_;
  std::vector<NCPoly> generators_;
  bool unitary_;
};

// Position of a degree-n word over d letters in ascending deglex order.
std::uint32_t word_index(const Word& w, std::size_t d);
Word word_at(std::uint32_t index, std::size_t d, std::size_t n);

// The multidegree block of Id(R, V): a row-reduced basis of the ideal part
// and the complementary normal-form words.
class MultidegreeComponent {
 public:
  MultidegreeComponent(std::vector<int> multidegree, const Variety& variety, const Limits& limits);

  const std::vector<int>& multidegree() const { return multidegree_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Word>& words() const { return words_; }
  std::optional<std::uint32_t> column(const Word& w) const;

  std::size_t ideal_dimension() const { return ideal_.rank(); }
  std::size_t quotient_dimension() const { return words_.size() - ideal_.rank(); }
  std::vector<Word> normal_words() const;
  std::vector<NCPoly> ideal_basis() const;

  // Requires every word of p to lie in this block.
  SparseVector to_vector(const NCPoly& p) const;
  NCPoly to_poly(const SparseVector& v) const;
  SparseVector reduce(SparseVector v) const { return ideal_.reduce(std::move(v)); }
  NCPoly normal_form(const NCPoly& p) const { return to_poly(reduce(to_vector(p))); }

 private:
  std::vector<int> multidegree_;
  std::size_t degree_;
  std::vector<Word> words_;
  std::vector<std::uint32_t> keys_;  // word_index of each word, ascending
  EchelonBasis ideal_;
};

class RelativelyFreeAlgebra;

// All multidegree blocks of one total degree.
class DegreeComponent {
 public:
  DegreeComponent(std::size_t d, std::size_t n,
                  std::vector<std::shared_ptr<const MultidegreeComponent>> blocks);

  std::size_t dimension() const { return d_; }
  std::size_t degree() const { return n_; }
  const std::vector<std::shared_ptr<const MultidegreeComponent>>& blocks() const {
    return blocks_;
  }

  std::size_t ideal_dimension() const;
  std::size_t quotient_dimension() const;
  std::vector<NCPoly> ideal_basis() const;
  // Ascending deglex.
  std::vector<Word> normal_words() const;

  // Throws UsageError unless p is homogeneous of this degree (or zero).
  NCPoly normal_form(const NCPoly& p) const;

 private:
  const MultidegreeComponent& block_of(const Word& w) const;

  std::size_t d_;
  std::size_t n_;
  std::vector<std::shared_ptr<const MultidegreeComponent>> blocks_;
};

// F(R, V) for dim V = d. Components are built on demand and cached; the
// cache is safe to share between threads.
class RelativelyFreeAlgebra {
 public:
  RelativelyFreeAlgebra(Variety variety, std::size_t d, ComputeOptions options = {});

  const Variety& variety() const { return variety_; }
  std::size_t dimension() const { return d_; }
  const ComputeOptions& options() const { return options_; }

  std::shared_ptr<const MultidegreeComponent> block(std::span<const int> multidegree) const;
  DegreeComponent component(std::size_t n) const;

  // Normal form of an arbitrary (not necessarily homogeneous) polynomial.
  NCPoly normal_form(const NCPoly& p) const;
  bool is_identity(const NCPoly& p) const { return normal_form(p).is_zero(); }

 private:
  void build_blocks(const std::vector<std::vector<int>>& multidegrees) const;

  Variety variety_;
  std::size_t d_;
  ComputeOptions options_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<int>, std::shared_ptr<const MultidegreeComponent>> cache_;
};

// Runs f(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f);

// Row-reduced basis (as normal forms) of the degree-n part of C^p, where C is
// the commutator ideal of F(R, V).
std::vector<NCPoly> commutator_power_component(const RelativelyFreeAlgebra& algebra, unsigned p,
                                               std::size_t n);
std::size_t commutator_power_dimension(const RelativelyFreeAlgebra& algebra, unsigned p,
                                       std::size_t n);

struct NilpotencyResult {
  std::optional<unsigned> ell;  // least p with (C^p)_n = 0 for all n <= cap
  unsigned lower_bound;         // ell >= lower_bound when ell is absent
  std::size_t verified_up_to;
  bool conclusive() const { return ell.has_value(); }
};

// Only p with 2p <= cap are tested: smaller caps cannot distinguish C^p from 0.
NilpotencyResult nilpotency_class_up_to(const RelativelyFreeAlgebra& algebra, std::size_t cap,
                                        unsigned p_max);

// x2 x1^n x3 + gamma x3 x1^n x2 + sum alpha_ij x1^i x2 x1^(n-i-j) x3 x1^j
//   + sum beta_ij x1^i x3 x1^(n-i-j) x2 x1^j, over i + j > 0.
struct IdentityShape {
  unsigned n = 0;
  Rational gamma;
  std::map<std::pair<unsigned, unsigned>, Rational> alpha;
  std::map<std::pair<unsigned, unsigned>, Rational> beta;
  NCPoly polynomial() const;
};

// h = x2 x1^(n+1) x3 + x1 h1 + h2 x1, multihomogeneous of degree n + 3.
struct SpecialIdentity {
  unsigned n = 0;
  NCPoly h;
  NCPoly h1;
  NCPoly h2;
  // n(R) = n + 1.
  unsigned n_r() const { return n + 1; }
};

// Splits h into x2 x1^(n+1) x3 + x1 h1 + h2 x1; throws if h has another shape.
SpecialIdentity split_special_identity(const NCPoly& h, unsigned n);

// `algebra` must have dimension at least 3. Least n in [2, n_max].
std::optional<IdentityShape> find_identity_shape_viii(const RelativelyFreeAlgebra& algebra,
                                                      unsigned n_max);

// Least n in [0, n_max] with an identity x2 x1^(n+1) x3 + x1 h1 + h2 x1.
std::optional<SpecialIdentity> find_identity_shape_3_2(const RelativelyFreeAlgebra& algebra,
                                                       unsigned n_max);

// The consequence f(x1, x2, x1 x3) of an IdentityShape identity.
SpecialIdentity special_identity_from_shape(const IdentityShape& shape);

}  // namespace ncinv
