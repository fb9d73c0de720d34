#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ncinv {

// Finite group given by its multiplication table over elements 0..order-1.
class FiniteGroup {
 public:
  using Element = std::size_t;

  // table[a][b] = a*b. Group axioms are checked exhaustively for order <= 512.
  explicit FiniteGroup(std::vector<std::vector<Element>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(unsigned m);
  // Z_{m1} x ... x Z_{mr}; element index is mixed radix with the first factor
  // varying slowest.
  static FiniteGroup product_of_cyclic(const std::vector<unsigned>& orders);
  static FiniteGroup klein_four();
  static FiniteGroup symmetric(unsigned k);

  std::size_t order() const { return table_.size(); }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const;

  bool is_abelian() const;
  bool is_cyclic() const;
  bool is_klein_four() const;
  bool validated() const { return validated_; }

  // Factor orders when built by product_of_cyclic (or cyclic / klein_four).
  const std::optional<std::vector<unsigned>>& cyclic_factors() const { return factors_; }
  // Exponent vector of an element of a product of cyclic groups.
  std::vector<unsigned> exponents(Element a) const;

  const std::vector<std::vector<Element>>& table() const { return table_; }

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  bool validated_ = false;
  std::optional<std::vector<unsigned>> factors_;
};

}  // namespace ncinv
