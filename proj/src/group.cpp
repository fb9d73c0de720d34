#include "ncinv/group.hpp"

#include <algorithm>
#include <numeric>

#include "ncinv/errors.hpp"

namespace ncinv {

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw UsageError("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw UsageError("group table is not square");
    for (Element e : row) {
      if (e >= n) throw UsageError("group table entry out of range");
    }
  }
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool is_identity = true;
    for (Element a = 0; a < n && is_identity; ++a) {
      is_identity = table_[e][a] == a && table_[a][e] == a;
    }
    if (is_identity) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw UsageError("group table has no identity element");
  inverse_.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == n) throw UsageError("element " + std::to_string(a) + " has no inverse");
  }
  if (n <= 512) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw UsageError("group table is not associative");
          }
        }
      }
    }
    validated_ = true;
  }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(unsigned m) { return product_of_cyclic({m}); }

FiniteGroup FiniteGroup::product_of_cyclic(const std::vector<unsigned>& orders) {
  std::size_t n = 1;
  for (unsigned m : orders) {
    if (m == 0) throw UsageError("cyclic factor of order 0");
    n *= m;
  }
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  auto decompose = [&](Element a) {
    std::vector<unsigned> e(orders.size());
    for (std::size_t j = orders.size(); j-- > 0;) {
      e[j] = static_cast<unsigned>(a % orders[j]);
      a /= orders[j];
    }
    return e;
  };
  for (Element a = 0; a < n; ++a) {
    auto ea = decompose(a);
    for (Element b = 0; b < n; ++b) {
      auto eb = decompose(b);
      Element c = 0;
      for (std::size_t j = 0; j < orders.size(); ++j) c = c * orders[j] + (ea[j] + eb[j]) % orders[j];
      table[a][b] = c;
    }
  }
  FiniteGroup g(std::move(table));
  g.factors_ = orders;
  return g;
}

FiniteGroup FiniteGroup::klein_four() { return product_of_cyclic({2, 2}); }

FiniteGroup FiniteGroup::symmetric(unsigned k) {
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(k);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::vector<unsigned> c(k);
      for (unsigned i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<Element>(
          std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(std::move(table));
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a) {
    for (Element b = a + 1; b < order(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (Element a = 0; a < order(); ++a) {
    if (element_order(a) == order()) return true;
  }
  return false;
}

bool FiniteGroup::is_klein_four() const {
  if (order() != 4 || !is_abelian()) return false;
  for (Element a = 0; a < 4; ++a) {
    if (element_order(a) > 2) return false;
  }
  return true;
}

std::vector<unsigned> FiniteGroup::exponents(Element a) const {
  if (!factors_) throw UsageError("group is not presented as a product of cyclic groups");
  const auto& orders = *factors_;
  std::vector<unsigned> e(orders.size());
  for (std::size_t j = orders.size(); j-- > 0;) {
    e[j] = static_cast<unsigned>(a % orders[j]);
    a /= orders[j];
  }
  return e;
}

}  // namespace ncinv
