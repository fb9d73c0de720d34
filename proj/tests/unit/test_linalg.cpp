#include <catch_amalgamated.hpp>

#include <random>

#include "ncinv/errors.hpp"
#include "ncinv/linalg.hpp"
#include "ncinv/modular.hpp"
#include "support/oracles.hpp"

using namespace ncinv;

namespace {

SparseVector random_vector(std::mt19937_64& rng, std::uint32_t columns, int density) {
  std::vector<SparseEntry> e;
  for (std::uint32_t c = 0; c < columns; ++c) {
    if (static_cast<int>(rng() % 100) < density) {
      e.emplace_back(c, oracle::fraction(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)));
    }
  }
  return make_sparse(std::move(e));
}

std::vector<Rational> dense(const SparseVector& v, std::size_t columns) {
  std::vector<Rational> out(columns);
  for (const auto& [c, x] : v) out[c] = x;
  return out;
}

}  // namespace

TEST_CASE("sparse vectors are canonical", "[linalg]") {
  auto v = make_sparse({{1, 2}, {3, 1}, {1, -2}, {0, 5}});
  REQUIRE(v.size() == 2);
  CHECK(v[0].first == 3);
  CHECK(v[1].first == 0);
  auto w = add_scaled(v, 2, make_sparse({{3, Rational(-1, 2)}}));
  CHECK(w == make_sparse({{0, 5}}));
  CHECK(dot(v, make_sparse({{3, 2}, {0, 1}})) == 7);
}

TEST_CASE("echelon rank matches dense elimination", "[linalg][property]") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::uint32_t cols = 4 + static_cast<std::uint32_t>(rng() % 10);
    std::vector<SparseVector> rows;
    const int count = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < count; ++i) rows.push_back(random_vector(rng, cols, 35));
    // Add dependent rows.
    if (rows.size() >= 2) rows.push_back(add_scaled(rows[0], Rational(3, 2), rows[1]));
    EchelonBasis basis(cols);
    std::vector<std::vector<Rational>> d;
    for (const auto& r : rows) {
      basis.insert(r);
      d.push_back(dense(r, cols));
    }
    CHECK(basis.rank() == oracle::dense_rank(d));
    for (const auto& r : rows) CHECK(basis.contains(r));
    // Reduced rows: pivot columns appear in exactly one row.
    auto rr = basis.reduced_rows();
    for (std::size_t i = 0; i < rr.size(); ++i) {
      for (std::size_t j = 0; j < rr.size(); ++j) {
        if (i == j) continue;
        for (const auto& [c, x] : rr[j]) CHECK(c != rr[i].front().first);
      }
    }
  }
}

TEST_CASE("linear combinations are solved exactly", "[linalg]") {
  std::vector<SparseVector> vs{make_sparse({{0, 1}, {1, 1}}), make_sparse({{1, 1}, {2, 1}})};
  auto c = solve_combination(vs, make_sparse({{0, 1}, {1, 3}, {2, 2}}));
  REQUIRE(c);
  CHECK((*c)[0] == 1);
  CHECK((*c)[1] == 2);
  CHECK_FALSE(solve_combination(vs, make_sparse({{0, 1}})));
}

TEST_CASE("modular arithmetic helpers", "[modular]") {
  const auto p = modular::prime(0);
  CHECK(modular::prime(63) < modular::prime(62));
  CHECK((modular::inverse(12345, p) * 12345) % p == 1);
  CHECK(modular::reduce(Rational(1, 2), p) == modular::inverse(2, p));
  auto q = modular::rational_reconstruct(Integer(modular::reduce(Rational(-7, 13), p)), Integer(p));
  REQUIRE(q);
  CHECK(*q == Rational(-7, 13));
}

TEST_CASE("certified solve matches exact solve", "[modular][property]") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 25; ++t) {
    const std::size_t unknowns = 2 + rng() % 5;
    std::vector<Rational> truth(unknowns);
    for (auto& v : truth) v = oracle::fraction(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5));
    std::vector<SparseVector> rows;
    for (std::size_t e = 0; e < unknowns + 2; ++e) {
      std::vector<SparseEntry> entries;
      Rational rhs = 0;
      for (std::size_t j = 0; j < unknowns; ++j) {
        Rational a(static_cast<long>(rng() % 7) - 3, 1);
        rhs += a * truth[j];
        entries.emplace_back(static_cast<std::uint32_t>(unknowns - j), a);
      }
      entries.emplace_back(0, rhs);
      rows.push_back(make_sparse(std::move(entries)));
    }
    auto check = [&](const std::vector<Rational>& sol) {
      for (const auto& r : rows) {
        Rational s = 0;
        Rational rhs = 0;
        for (const auto& [c, a] : r) {
          if (c == 0) {
            rhs = a;
          } else {
            s += a * sol[unknowns - c];
          }
        }
        if (s != rhs) return false;
      }
      return true;
    };
    auto exact = solve_linear_system(rows, unknowns);
    auto fast = modular::certified_solve(rows, unknowns, check);
    REQUIRE(exact);
    REQUIRE(fast);
    CHECK(check(*exact));
    CHECK(check(*fast));
  }
}
