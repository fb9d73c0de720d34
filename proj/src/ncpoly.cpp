#include "ncinv/ncpoly.hpp"

#include <algorithm>
#include <numeric>

#include "ncinv/errors.hpp"

namespace ncinv {

NCPoly::NCPoly(const Word& w, const Rational& c) {
  if (!ncinv::is_zero(c)) terms_.emplace(w, c);
}

NCPoly NCPoly::constant(const Rational& c) { return NCPoly(Word(), c); }

NCPoly NCPoly::variable(Letter i) { return NCPoly(Word::letter(i)); }

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (ncinv::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (ncinv::is_zero(it->second)) terms_.erase(it);
  }
}

const Word& NCPoly::leading_word() const {
  if (terms_.empty()) throw UsageError("leading word of the zero polynomial");
  return terms_.rbegin()->first;
}

int NCPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

int NCPoly::low_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool NCPoly::is_homogeneous() const { return degree() == low_degree(); }

Letter NCPoly::max_letter() const {
  Letter m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_letter());
  return m;
}

bool NCPoly::is_multilinear_in(std::size_t d) const {
  if (terms_.empty()) return false;
  for (const auto& [w, c] : terms_) {
    if (w.degree() != d) return false;
    auto md = w.multidegree(std::max<std::size_t>(d, w.max_letter()));
    for (std::size_t i = 0; i < md.size(); ++i) {
      if (md[i] != (i < d ? 1 : 0)) return false;
    }
  }
  return true;
}

NCPoly NCPoly::homogeneous_component(std::size_t n) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    if (w.degree() == n) out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

std::map<std::vector<int>, NCPoly> NCPoly::multihomogeneous_components(std::size_t d) const {
  std::map<std::vector<int>, NCPoly> out;
  for (const auto& [w, c] : terms_) {
    out[w.multidegree(d)].terms_.emplace(w, c);
  }
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (ncinv::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      out.add_term(wa * wb, ca * cb);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const NCPoly& a, const NCPoly& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (ia->second != ib->second) {
      return ia->second < ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return a.terms_.size() <=> b.terms_.size();
}

NCPoly power(const NCPoly& p, unsigned e) {
  NCPoly out = NCPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) out = out * p;
  return out;
}

NCPoly commutator(const NCPoly& u, const NCPoly& v) { return u * v - v * u; }

NCPoly commutator(std::span<const NCPoly> args) {
  if (args.size() < 2) throw UsageError("commutator needs at least two arguments");
  NCPoly acc = commutator(args[0], args[1]);
  for (std::size_t i = 2; i < args.size(); ++i) acc = commutator(acc, args[i]);
  return acc;
}

NCPoly substitute(const NCPoly& p, std::span<const NCPoly> images, bool unitary) {
  Letter needed = p.max_letter();
  if (needed > images.size()) {
    throw UsageError("no image given for variable x" + std::to_string(needed));
  }
  if (!unitary) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!ncinv::is_zero(images[i].constant_term())) {
        throw UsageError("image of x" + std::to_string(i + 1) +
                         " has a constant term in nonunitary mode");
      }
    }
  }
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly term = NCPoly::constant(c);
    for (Letter l : w.letters()) {
      term = term * images[l - 1];
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

std::vector<NCPoly> compose_substitutions(std::span<const NCPoly> inner,
                                          std::span<const NCPoly> outer, bool unitary) {
  std::vector<NCPoly> out;
  out.reserve(inner.size());
  for (const auto& p : inner) out.push_back(substitute(p, outer, unitary));
  return out;
}

NCPoly standard_polynomial(unsigned k) {
  if (k == 0) throw UsageError("standard polynomial needs k >= 1");
  std::vector<Letter> perm(k);
  std::iota(perm.begin(), perm.end(), Letter{1});
  NCPoly out;
  do {
    int inversions = 0;
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    out.add_term(Word(perm), inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace ncinv
