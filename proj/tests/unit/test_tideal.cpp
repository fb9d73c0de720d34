#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ncinv/errors.hpp"
#include "ncinv/ncparse.hpp"
#include "ncinv/tideal.hpp"
#include "support/oracles.hpp"

using namespace ncinv;

namespace {

NCPoly P(std::string_view s) { return parse_ncpoly(s, 16); }
NCPoly x(Letter i) { return NCPoly::variable(i); }

Variety u2() { return Variety({P("[x1,x2]*[x3,x4]")}); }
Variety u3() { return Variety({P("[x1,x2]*[x3,x4]*[x5,x6]")}); }
Variety m2() { return Variety({standard_polynomial(4), P("[[x1,x2]^2,x3]")}); }

}  // namespace

TEST_CASE("multilinearization", "[tideal]") {
  auto sq = multilinearize(x(1) * x(1));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0] == P("x1*x2 + x2*x1"));
  auto cube = multilinearize(x(1) * x(1) * x(1));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].size() == 6);
  CHECK(cube[0].is_multilinear_in(3));
  auto c = P("[x1,x2]*[x3,x4]");
  CHECK(multilinearize(c) == std::vector<NCPoly>{c});
  // Non-homogeneous input splits into its components.
  CHECK(multilinearize(x(1) * x(1) + x(2)).size() == 2);
}

TEST_CASE("word coordinates", "[tideal]") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto ws = words_of_degree(3, n);
    for (std::uint32_t i = 0; i < ws.size(); ++i) {
      CHECK(word_index(ws[i], 3) == i);
      CHECK(word_at(i, 3, n) == ws[i]);
    }
  }
}

TEST_CASE("commutative component in degree 2", "[tideal]") {
  RelativelyFreeAlgebra alg(Variety::commutative(), 2);
  auto c = alg.component(2);
  CHECK(c.ideal_dimension() == 1);
  CHECK(c.normal_words() == std::vector<Word>{Word{1, 1}, Word{1, 2}, Word{2, 2}});
  CHECK(c.normal_form(NCPoly(Word{2, 1})) == NCPoly(Word{1, 2}));
  CHECK_THROWS_AS(c.normal_form(x(1)), UsageError);
}

TEST_CASE("commutative quotient dimensions are monomial counts", "[tideal][oracle]") {
  for (std::size_t d : {2, 3}) {
    RelativelyFreeAlgebra alg(Variety::commutative(), d);
    for (std::size_t n = 0; n <= 6; ++n) {
      CHECK(alg.component(n).quotient_dimension() == oracle::commutative_count(d, n));
    }
  }
}

TEST_CASE("free algebra has no relations", "[tideal]") {
  RelativelyFreeAlgebra alg(Variety::free_algebra(), 2);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(alg.component(n).quotient_dimension() == (1u << n));
}

TEST_CASE("quotient dimensions match generic evaluation", "[tideal][oracle]") {
  SECTION("upper triangular matrices") {
    RelativelyFreeAlgebra alg(u2(), 2);
    const auto a = StructureAlgebra::upper_triangular_2x2();
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(alg.component(n).quotient_dimension() == oracle::generic_quotient_dimension(a, 2, n));
    }
    CHECK(alg.component(4).quotient_dimension() > oracle::commutative_count(2, 4));
    RelativelyFreeAlgebra alg3(u2(), 3);
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(alg3.component(n).quotient_dimension() == oracle::generic_quotient_dimension(a, 3, n));
    }
  }
  SECTION("full matrices") {
    RelativelyFreeAlgebra alg(m2(), 2);
    const auto a = StructureAlgebra::matrices_2x2();
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(alg.component(n).quotient_dimension() == oracle::generic_quotient_dimension(a, 2, n));
    }
  }
}

TEST_CASE("unitary closure", "[tideal]") {
  auto f = P("x1*[x2,x3]*x4");
  RelativelyFreeAlgebra unitary(Variety({f}, true), 2);
  RelativelyFreeAlgebra plain(Variety({f}, false), 2);
  CHECK(unitary.component(2).quotient_dimension() == 3);
  CHECK(plain.component(2).quotient_dimension() == 4);
  CHECK(plain.component(4).quotient_dimension() < 16);
  CHECK_THROWS_AS(Variety({P("x1 + 1")}, false), UsageError);
}

TEST_CASE("component invariants", "[tideal][property]") {
  RelativelyFreeAlgebra alg(u3(), 3);
  for (std::size_t n = 0; n <= 5; ++n) {
    auto c = alg.component(n);
    std::size_t words = 1;
    for (std::size_t i = 0; i < n; ++i) words *= 3;
    CHECK(c.ideal_dimension() + c.quotient_dimension() == words);
    std::set<Word> leading;
    for (const auto& g : c.ideal_basis()) CHECK(leading.insert(g.leading_word()).second);
    for (const auto& w : c.normal_words()) CHECK(leading.count(w) == 0);
  }
}

TEST_CASE("normal form is a projection killing the ideal", "[tideal][property]") {
  std::mt19937_64 rng(29);
  RelativelyFreeAlgebra alg(u2(), 3);
  const auto gens = alg.variety().generators();
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 4;
    NCPoly p;
    for (int k = 0; k < 4; ++k) p.add_term(oracle::random_word(rng, 3, n), static_cast<long>(rng() % 5) - 2);
    NCPoly q;
    for (int k = 0; k < 4; ++k) q.add_term(oracle::random_word(rng, 3, n), static_cast<long>(rng() % 5) - 2);
    auto np = alg.normal_form(p);
    CHECK(alg.normal_form(np) == np);
    CHECK(alg.normal_form(p + Rational(3) * q) == np + Rational(3) * alg.normal_form(q));
  }
  // Substitution instances of the original identity reduce to zero.
  const NCPoly f = P("[x1,x2]*[x3,x4]");
  for (int t = 0; t < 30; ++t) {
    std::vector<NCPoly> images;
    for (int i = 0; i < 4; ++i) images.push_back(oracle::random_poly(rng, 3, 2, 2));
    auto inst = substitute(f, images);
    if (inst.is_zero() || inst.degree() > 7) continue;
    CHECK(alg.normal_form(inst).is_zero());
  }
}

TEST_CASE("resource limits", "[tideal]") {
  ComputeOptions tight;
  tight.limits.max_component_words = 9;
  RelativelyFreeAlgebra alg(u2(), 2, tight);
  CHECK_THROWS_AS(alg.component(5), ResourceError);
  tight.limits = {};
  tight.limits.max_degree = 3;
  RelativelyFreeAlgebra capped(u2(), 2, tight);
  CHECK_THROWS_AS(capped.component(4), ResourceError);
}

TEST_CASE("threaded construction is deterministic", "[tideal]") {
  ComputeOptions many;
  many.threads = 4;
  RelativelyFreeAlgebra a(u3(), 2);
  RelativelyFreeAlgebra b(u3(), 2, many);
  for (std::size_t n = 0; n <= 7; ++n) CHECK(a.component(n).ideal_basis() == b.component(n).ideal_basis());
}

TEST_CASE("commutator ideal powers", "[tideal]") {
  RelativelyFreeAlgebra comm(Variety::commutative(), 2);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(commutator_power_dimension(comm, 1, n) == 0);
  RelativelyFreeAlgebra free(Variety::free_algebra(), 2);
  CHECK(commutator_power_dimension(free, 1, 2) == 1);
  RelativelyFreeAlgebra alg(u2(), 2);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(commutator_power_dimension(alg, 2, n) == 0);
  const std::vector<std::size_t> c1{0, 0, 1, 4, 10, 20, 35, 56, 84};
  for (std::size_t n = 0; n <= 8; ++n) CHECK(commutator_power_dimension(alg, 1, n) == c1[n]);
}

TEST_CASE("commutator powers decrease", "[tideal][property]") {
  RelativelyFreeAlgebra free(Variety::free_algebra(), 2);
  RelativelyFreeAlgebra alg(u3(), 2);
  for (const auto* a : {&free, &alg}) {
    for (std::size_t n = 2; n <= 6; ++n) {
      for (unsigned p = 1; p <= 3; ++p) {
        CHECK(commutator_power_dimension(*a, p + 1, n) <= commutator_power_dimension(*a, p, n));
      }
    }
  }
}

TEST_CASE("nilpotency class", "[tideal]") {
  auto comm = nilpotency_class_up_to(RelativelyFreeAlgebra(Variety::commutative(), 2), 6, 4);
  REQUIRE(comm.ell);
  CHECK(*comm.ell == 1);
  auto two = nilpotency_class_up_to(RelativelyFreeAlgebra(u2(), 2), 8, 4);
  REQUIRE(two.ell);
  CHECK(*two.ell == 2);
  CHECK(two.verified_up_to == 8);
  auto three = nilpotency_class_up_to(RelativelyFreeAlgebra(u3(), 2), 8, 4);
  REQUIRE(three.ell);
  CHECK(*three.ell == 3);
  auto free = nilpotency_class_up_to(RelativelyFreeAlgebra(Variety::free_algebra(), 2), 6, 3);
  CHECK_FALSE(free.ell);
  CHECK(free.lower_bound == 4);
}

TEST_CASE("identity shape (viii)", "[tideal]") {
  RelativelyFreeAlgebra comm(Variety::commutative(), 3);
  auto s = find_identity_shape_viii(comm, 4);
  REQUIRE(s);
  CHECK(s->n == 2);
  CHECK(s->gamma == -1);
  for (const auto& [k, v] : s->alpha) CHECK(v == 0);
  for (const auto& [k, v] : s->beta) CHECK(v == 0);

  RelativelyFreeAlgebra alg(u2(), 3);
  auto t = find_identity_shape_viii(alg, 4);
  REQUIRE(t);
  CHECK(t->n == 2);
  CHECK(alg.is_identity(t->polynomial()));
  // Coefficients carry real content: the two leading words alone do not
  // give an identity.
  CHECK_FALSE(alg.is_identity(P("x2*x1^2*x3") + t->gamma * P("x3*x1^2*x2")));

  RelativelyFreeAlgebra free(Variety::free_algebra(), 3);
  CHECK_FALSE(find_identity_shape_viii(free, 4));
  CHECK_THROWS_AS(find_identity_shape_viii(RelativelyFreeAlgebra(Variety::commutative(), 2), 3),
                  UsageError);
}

TEST_CASE("special identity shape", "[tideal]") {
  RelativelyFreeAlgebra comm(Variety::commutative(), 3);
  auto s = find_identity_shape_3_2(comm, 3);
  REQUIRE(s);
  CHECK(s->n == 0);
  CHECK(comm.is_identity(s->h));

  RelativelyFreeAlgebra alg(u2(), 3);
  auto t = find_identity_shape_3_2(alg, 3);
  REQUIRE(t);
  CHECK(t->n == 1);
  CHECK(t->n_r() == 2);
  CHECK(alg.is_identity(t->h));
  CHECK(t->h == P("x2*x1^2*x3") + x(1) * t->h1 + t->h2 * x(1));

  RelativelyFreeAlgebra free(Variety::free_algebra(), 3);
  CHECK_FALSE(find_identity_shape_3_2(free, 3));
}

TEST_CASE("both shape searches are consistent", "[tideal][property]") {
  for (const auto& v : {Variety::commutative(), u2()}) {
    RelativelyFreeAlgebra alg(v, 3);
    auto viii = find_identity_shape_viii(alg, 4);
    auto direct = find_identity_shape_3_2(alg, 4);
    REQUIRE(viii);
    REQUIRE(direct);
    auto derived = special_identity_from_shape(*viii);
    CHECK(alg.is_identity(derived.h));
    CHECK(direct->n <= derived.n);
  }
}
