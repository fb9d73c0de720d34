// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ncinv/action.hpp"
#include "ncinv/app.hpp"
#include "ncinv/bounds.hpp"
#include "ncinv/invariants.hpp"
#include "ncinv/nagata_higman.hpp"
#include "ncinv/ncparse.hpp"
#include "ncinv/structure_algebra.hpp"
#include "ncinv/tideal.hpp"

using namespace ncinv;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

NCPoly P(std::string_view s) { return parse_ncpoly(s, 16); }

Outcome nu2() {
  Outcome o;
  auto t = std::chrono::steady_clock::now();
  bool m2 = nh_member(2, 2);
  bool m3 = nh_member(2, 3);
  double s = seconds_since(t);
  o.detail << "nh_member(2,2)=" << m2 << " nh_member(2,3)=" << m3 << " in " << s << " s";
  o.require(!m2 && m3, "membership");
  o.require(s < 1.0, "runtime below 1 s");
  return o;
}

Outcome nu3() {
  Outcome o;
  auto t = std::chrono::steady_clock::now();
  bool m5 = nh_member(3, 5);
  bool m6 = nh_member(3, 6);
  double s = seconds_since(t);
  o.detail << "nh_member(3,5)=" << m5 << " nh_member(3,6)=" << m6 << " in " << s << " s";
  o.require(!m5 && m6, "membership");
  o.require(s < 120.0, "runtime below 2 min");
  return o;
}

Outcome certificates() {
  Outcome o;
  for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 4}, {3, 6}}) {
    auto cert = power_decomposition(n, m);
    NCPoly sum;
    for (const auto& [c, u] : cert.terms) {
      NCPoly pw = u;
      for (unsigned k = 1; k < n; ++k) pw = pw * u;
      sum = sum + c * pw;
    }
    std::vector<Letter> letters(m);
    for (unsigned i = 0; i < m; ++i) letters[i] = static_cast<Letter>(i + 1);
    bool ok = sum == NCPoly(Word(letters)) && cert.verify();
    o.detail << "(" << n << "," << m << "): " << cert.terms.size() << " terms " << (ok ? "exact" : "MISMATCH")
             << "; ";
    o.require(ok, "re-expansion");
  }
  return o;
}

Outcome noether_values() {
  Outcome o;
  for (unsigned k = 2; k <= 4; ++k) {
    RelativelyFreeAlgebra alg(Variety::commutative(), k);
    auto r = generator_degrees(alg, GroupAction(regular_action(FiniteGroup::cyclic(k))), k, noether_bound(k));
    o.detail << "Z" << k << ": beta=" << r.beta << (r.conclusive ? " conclusive; " : " inconclusive; ");
    o.require(r.beta == k && r.conclusive, "cyclic beta");
  }
  RelativelyFreeAlgebra alg(Variety::commutative(), 4);
  auto r = generator_degrees(alg, GroupAction(regular_action(FiniteGroup::klein_four())), 4, noether_bound(4));
  o.detail << "Klein four: beta=" << r.beta;
  o.require(r.beta == 3 && r.conclusive, "Klein four beta");
  return o;
}

Outcome hilbert_ideal() {
  Outcome o;
  auto a = check_inclusion_lemma_2_8(GroupAction(MonomialAction::cyclic(2, {1, 0})), 8);
  auto b = check_inclusion_lemma_2_8(GroupAction(MonomialAction::cyclic(3, {1, 2})), 8);
  o.detail << "Z2 diag(-1,1): " << a.degrees.size() << " degrees hold=" << a.holds << "; Z3 (1),(2): "
           << b.degrees.size() << " degrees hold=" << b.holds;
  o.require(a.holds && b.holds && !a.degrees.empty() && !b.degrees.empty(), "inclusion");
  o.require(a.verified_up_to == 8 && b.verified_up_to == 8, "cap 8");
  return o;
}

struct BoundData {
  unsigned ell = 0;
  unsigned n_r = 0;
  std::uint64_t bound = 0;
  std::size_t beta = 0;
  bool conclusive = false;
};

BoundData bound_data() {
  BoundData t;
  const Variety v({P("[x1,x2]*[x3,x4]")});
  RelativelyFreeAlgebra alg(v, 2);
  auto nil = nilpotency_class_up_to(alg, 8, 8);
  t.ell = nil.ell.value_or(0);
  RelativelyFreeAlgebra search(v, 3);
  auto shape = find_identity_shape_3_2(search, 4);
  t.n_r = shape ? shape->n_r() : 0;
  if (t.ell < 2 || t.n_r < 2) return t;
  t.bound = bound_thm_3_2(t.n_r, t.ell, 2, 2).value;
  auto r = beta_relfree(alg, GroupAction(MonomialAction::cyclic(2, {1, 0})), t.bound, t.bound);
  t.beta = r.beta;
  t.conclusive = r.conclusive;
  return t;
}

Outcome nilpotency_bound(const BoundData& t) {
  Outcome o;
  o.detail << "ell=" << t.ell << " n(R)=" << t.n_r << " bound=" << t.bound << " beta=" << t.beta;
  o.require(t.ell == 2, "ell = 2");
  o.require(t.n_r == 2, "recorded n(R) = 2");
  o.require(t.conclusive, "exact beta");
  o.require(t.bound > 0 && t.beta <= t.bound, "beta <= bound");
  return o;
}

Outcome abelian_bound(const BoundData& t) {
  Outcome o;
  if (t.n_r < 2) {
    o.require(false, "n(R) unavailable");
    return o;
  }
  auto b = bound_thm_3_4(t.n_r, 2).value;
  o.detail << "bound=" << b << " beta=" << t.beta;
  o.require(t.conclusive && t.beta <= b, "beta <= bound");
  return o;
}

Outcome pigeonhole() {
  Outcome o;
  auto r = check_invariant_subword(20240601, 1000, 6, 6);
  o.detail << r.parameters.at("instances") << " instances, " << r.parameters.at("failures") << " failures";
  o.require(r.holds && r.parameters.at("instances") == 1000, "all subwords invariant");
  return o;
}

Outcome commutator_span() {
  Outcome o;
  RelativelyFreeAlgebra alg(Variety({P("[x1,x2]*[x3,x4]*[x5,x6]")}), 2);
  auto r = check_lemma_3_1(alg, 1, 6, std::nullopt);
  for (const auto& d : r.degrees) o.detail << "n=" << d.degree << ":" << d.achieved << "/" << d.expected << " ";
  o.require(r.holds && !r.degrees.empty(), "rank equality");
  return o;
}

Outcome identities() {
  Outcome o;
  const auto m2 = StructureAlgebra::matrices_2x2();
  const auto u2 = StructureAlgebra::upper_triangular_2x2();
  bool s4 = holds_in_algebra(standard_polynomial(4), m2);
  bool comm = holds_in_algebra(P("[x1,x2]"), m2);
  bool prod = holds_in_algebra(P("[x1,x2]*[x3,x4]"), u2);
  RelativelyFreeAlgebra alg(Variety::commutative(), 3);
  auto shape = find_identity_shape_viii(alg, 4);
  o.detail << "s4@M2=" << s4 << " [x1,x2]@M2=" << comm << " [x1,x2][x3,x4]@U2=" << prod;
  if (shape) o.detail << " shape n=" << shape->n << " gamma=" << to_string(shape->gamma);
  o.require(s4 && !comm && prod, "evaluations");
  o.require(shape && shape->n == 2 && shape->gamma == -1, "commutative shape");
  return o;
}

Outcome determinism() {
  Outcome o;
  std::vector<std::filesystem::path> configs;
  for (const auto& e : std::filesystem::directory_iterator(NCINV_ACCEPTANCE_DIR)) {
    if (e.path().extension() == ".json") configs.push_back(e.path());
  }
  std::sort(configs.begin(), configs.end());
  std::size_t same = 0;
  for (const auto& path : configs) {
    auto config = app::load_config(path.string());
    app::Overrides one;
    one.threads = 1;
    app::Overrides four;
    four.threads = 4;
    auto a = app::strip_timings(app::run_task(config, one)).dump();
    auto b = app::strip_timings(app::run_task(config, four)).dump();
    if (a == b) {
      ++same;
    } else {
      o.require(false, path.filename().string());
    }
  }
  o.detail << same << "/" << configs.size() << " configs identical at 1 and 4 threads";
  o.require(!configs.empty(), "configs present");
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& f) {
    auto t = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.str().c_str(),
                seconds_since(t));
    std::fflush(stdout);
  };
  report(1, "nu(2) = 3", nu2);
  report(2, "nu(3) = 6", nu3);
  report(3, "power certificates", certificates);
  report(4, "commutative Noether values", noether_values);
  report(5, "high powers in the Hilbert ideal", hilbert_ideal);
  BoundData t;
  try {
    t = bound_data();
  } catch (const std::exception& e) {
    std::printf("error computing bound data: %s\n", e.what());
  }
  report(6, "bound from the nilpotency class", [&] { return nilpotency_bound(t); });
  report(7, "bound for abelian groups", [&] { return abelian_bound(t); });
  report(8, "pigeonhole subwords", pigeonhole);
  report(9, "bounded products span C/C^2", commutator_span);
  report(10, "identity evaluation", identities);
  report(11, "determinism across thread counts", determinism);
  return failures == 0 ? 0 : 1;
}
