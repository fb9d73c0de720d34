#include <catch_amalgamated.hpp>

#include <random>

#include "ncinv/action.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/group.hpp"
#include "ncinv/ncparse.hpp"
#include "support/oracles.hpp"

using namespace ncinv;

namespace {

NCPoly P(std::string_view s) { return parse_ncpoly(s, 16); }

bool is_identity_matrix(const MatrixAction::Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

MatrixAction::Matrix product(const MatrixAction::Matrix& a, const MatrixAction::Matrix& b) {
  MatrixAction::Matrix c(a.size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      for (std::size_t k = 0; k < a.size(); ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

// Brute-force average over the group of every degree-n word.
std::vector<NCPoly> brute_force_invariants(const GroupAction& action, std::size_t n) {
  std::vector<NCPoly> out;
  for (const auto& w : words_of_degree(action.dim(), n)) {
    NCPoly sum;
    for (FiniteGroup::Element g = 0; g < action.group().order(); ++g) sum += action.act_on_word(g, w);
    if (!sum.is_zero()) out.push_back(sum);
  }
  return out;
}

}  // namespace

TEST_CASE("finite groups", "[group]") {
  auto z6 = FiniteGroup::cyclic(6);
  CHECK(z6.order() == 6);
  CHECK(z6.is_cyclic());
  CHECK(z6.is_abelian());
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.element_order(2) == 3);
  CHECK(z6.validated());
  auto v4 = FiniteGroup::klein_four();
  CHECK(v4.is_klein_four());
  CHECK_FALSE(v4.is_cyclic());
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  auto p = FiniteGroup::product_of_cyclic({2, 3});
  CHECK(p.is_cyclic());
  CHECK(p.exponents(p.multiply(1, 4)) == std::vector<unsigned>{(0 + 1) % 2, (1 + 1) % 3});
  for (FiniteGroup::Element a = 0; a < s3.order(); ++a) {
    CHECK(s3.multiply(a, s3.inverse(a)) == s3.identity());
  }
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), UsageError);
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 2, 0}}), UsageError);
  // Latin square with identity but not associative.
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2, 3, 4},
                               {1, 0, 3, 4, 2},
                               {2, 4, 0, 1, 3},
                               {3, 2, 4, 0, 1},
                               {4, 3, 1, 2, 0}}),
                  UsageError);
}

TEST_CASE("characters add under multiplication", "[group][property]") {
  auto g = FiniteGroup::product_of_cyclic({2, 3, 4});
  MonomialAction act(g, {{1, 0, 1}, {0, 2, 3}, {1, 1, 1}});
  for (FiniteGroup::Element a = 0; a < g.order(); ++a) {
    for (FiniteGroup::Element b = 0; b < g.order(); ++b) {
      for (const auto& w : {Word{1}, Word{2, 3}, Word{3, 3, 1}}) {
        Rational sum = act.phase(a, w) + act.phase(b, w);
        if (sum >= 1) sum -= 1;
        CHECK(act.phase(g.multiply(a, b), w) == sum);
      }
    }
  }
}

TEST_CASE("regular representations", "[action]") {
  auto z2 = regular_action(FiniteGroup::cyclic(2));
  CHECK(is_identity_matrix(z2.matrix(0)));
  CHECK(z2.matrix(1) == MatrixAction::Matrix{{0, 1}, {1, 0}});
  auto v4 = regular_action(FiniteGroup::klein_four());
  for (FiniteGroup::Element g = 0; g < 4; ++g) CHECK(is_identity_matrix(product(v4.matrix(g), v4.matrix(g))));
  auto z3 = regular_action(FiniteGroup::cyclic(3));
  CHECK(is_identity_matrix(product(z3.matrix(1), product(z3.matrix(1), z3.matrix(1)))));
  CHECK_FALSE(is_identity_matrix(z3.matrix(1)));
  // Not a homomorphism.
  CHECK_THROWS_AS(MatrixAction(FiniteGroup::cyclic(3), {{{1}}, {{-1}}, {{-1}}}), UsageError);
}

TEST_CASE("acting on words", "[action]") {
  auto m = MonomialAction::cyclic(2, {1});
  CHECK(m.act_on_word(1, Word{1}) == -NCPoly::variable(1));
  CHECK(m.act_on_word(1, Word{1, 1}) == NCPoly(Word{1, 1}));
  CHECK(m.act_on_word(0, Word{1}) == NCPoly::variable(1));
  auto three = MonomialAction::cyclic(3, {1});
  CHECK(three.phase(1, Word{1}) == Rational(1, 3));
  CHECK_THROWS_AS(three.act_on_word(1, Word{1}), UsageError);
  auto swap = regular_action(FiniteGroup::cyclic(2));
  CHECK(swap.act_on_word(1, Word{1, 2}) == NCPoly(Word{2, 1}));
  CHECK(swap.act_on_word(0, Word{1, 2}) == NCPoly(Word{1, 2}));
  auto perm = cyclic_permutation_action(3, {1, 2, 0});
  CHECK(perm.act_on_word(1, Word{1, 3}) == NCPoly(Word{2, 1}));
}

TEST_CASE("monomial invariance is exponent arithmetic", "[action][property]") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const unsigned m = 2 + rng() % 5;
    std::vector<int> chi{static_cast<int>(rng() % m), static_cast<int>(rng() % m)};
    auto act = MonomialAction::cyclic(m, chi);
    auto w = oracle::random_word(rng, 2, 1 + rng() % 6);
    int sum = 0;
    for (auto l : w.letters()) sum += chi[l - 1];
    CHECK(act.is_invariant(w) == (sum % static_cast<int>(m) == 0));
  }
}

TEST_CASE("reynolds bases", "[action]") {
  SECTION("diagonal action, free algebra") {
    GroupAction act(MonomialAction::cyclic(2, {1, 0}));
    CHECK(reynolds_basis(act, 2) == std::vector<NCPoly>{P("x1^2"), P("x2^2")});
  }
  SECTION("swap, free algebra") {
    GroupAction act(regular_action(FiniteGroup::cyclic(2)));
    auto basis = reynolds_basis(act, 2);
    CHECK(basis.size() == 2);
    CHECK(oracle::poly_rank(basis) == 2);
    auto brute = brute_force_invariants(act, 2);
    auto joined = basis;
    joined.insert(joined.end(), brute.begin(), brute.end());
    CHECK(oracle::poly_rank(joined) == 2);
    CHECK(oracle::poly_rank(brute) == 2);
  }
  SECTION("swap, commutative quotient") {
    RelativelyFreeAlgebra alg(Variety::commutative(), 2);
    GroupAction act(regular_action(FiniteGroup::cyclic(2)));
    auto basis = reynolds_basis(act, alg.component(2));
    CHECK(basis.size() == 2);
    std::vector<NCPoly> expected{P("x1^2 + x2^2"), P("x1*x2")};
    auto joined = basis;
    joined.insert(joined.end(), expected.begin(), expected.end());
    CHECK(oracle::poly_rank(joined) == 2);
  }
  SECTION("trivial group") {
    RelativelyFreeAlgebra alg(Variety({P("[x1,x2]*[x3,x4]")}), 2);
    GroupAction diag(MonomialAction::cyclic(1, {0, 0}));
    auto c = alg.component(4);
    CHECK(reynolds_basis(diag, c).size() == c.quotient_dimension());
  }
}

TEST_CASE("reynolds operator is a projection", "[action][property]") {
  RelativelyFreeAlgebra alg(Variety({P("[x1,x2]*[x3,x4]")}), 3);
  MatrixAction act = cyclic_permutation_action(3, {1, 2, 0});
  GroupAction ga(act);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto c = alg.component(n);
    auto words = c.normal_words();
    auto cols = reynolds_operator(act, c);
    REQUIRE(cols.size() == words.size());
    Rational trace = 0;
    for (std::size_t i = 0; i < words.size(); ++i) trace += cols[i].coefficient(words[i]);
    auto basis = reynolds_basis(ga, c);
    CHECK(trace == static_cast<long>(basis.size()));
    CHECK(oracle::poly_rank(cols) == basis.size());
    // Every invariant is fixed by every group element.
    for (const auto& f : basis) {
      for (FiniteGroup::Element g = 0; g < 3; ++g) CHECK(c.normal_form(act.act(g, f)) == f);
    }
    // Averaging twice equals averaging once.
    for (std::size_t i = 0; i < words.size(); ++i) {
      NCPoly again;
      for (const auto& [w, coef] : cols[i].terms()) {
        auto pos = std::lower_bound(words.begin(), words.end(), w) - words.begin();
        again += coef * cols[pos];
      }
      CHECK(again == cols[i]);
    }
  }
}

TEST_CASE("quotient maps are equivariant", "[action][property]") {
  std::mt19937_64 rng(43);
  RelativelyFreeAlgebra alg(Variety::commutative(), 3);
  auto act = MonomialAction(FiniteGroup::product_of_cyclic({2, 2}), {{1, 0}, {0, 1}, {1, 1}});
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 4;
    NCPoly p;
    for (int k = 0; k < 3; ++k) p.add_term(oracle::random_word(rng, 3, n), static_cast<long>(rng() % 7) - 3);
    auto g = static_cast<FiniteGroup::Element>(rng() % 4);
    CHECK(alg.normal_form(act.act(g, p)) == act.act(g, alg.normal_form(p)));
  }
}
