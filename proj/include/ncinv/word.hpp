#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace ncinv {

// Variable index, 1-based: letter i stands for x_i.
using Letter = std::uint16_t;

// A monomial of the free algebra: a finite sequence of letters. The empty
// word is the unit monomial. Words are totally ordered by deglex: shorter
// words first, then lexicographically with x1 < x2 < ...
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  static Word letter(Letter i) { return Word({i}); }

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  // Largest letter index occurring, 0 for the empty word.
  Letter max_letter() const;

  // Per-variable letter counts for x1..xd.
  std::vector<int> multidegree(std::size_t d) const;

  Word subword(std::size_t pos, std::size_t len) const;
  Word concat(const Word& other) const;
  Word& append(const Word& other);
  Word& push_back(Letter i);

  bool starts_with(Letter i) const { return !letters_.empty() && letters_.front() == i; }
  bool ends_with(Letter i) const { return !letters_.empty() && letters_.back() == i; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  std::size_t hash() const;

 private:
  std::vector<Letter> letters_;
};

Word operator*(const Word& a, const Word& b);

// All words of length n over x1..xd, ascending deglex order.
std::vector<Word> words_of_degree(std::size_t d, std::size_t n);

// All words with the given multidegree, ascending deglex order.
std::vector<Word> words_of_multidegree(std::span<const int> multidegree);

// All multidegrees (compositions of n into d nonnegative parts).
std::vector<std::vector<int>> multidegrees_of_degree(std::size_t d, std::size_t n);

}  // namespace ncinv

template <>
struct std::hash<ncinv::Word> {
  std::size_t operator()(const ncinv::Word& w) const noexcept { return w.hash(); }
};
