#include "ncinv/word.hpp"

#include <algorithm>

#include "ncinv/errors.hpp"

namespace ncinv {

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) {
  for (Letter l : letters_) {
    if (l == 0) throw UsageError("word letters are 1-based");
  }
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (l == 0) throw UsageError("word letters are 1-based");
  }
}

Letter Word::max_letter() const {
  Letter m = 0;
  for (Letter l : letters_) m = std::max(m, l);
  return m;
}

std::vector<int> Word::multidegree(std::size_t d) const {
  std::vector<int> md(d, 0);
  for (Letter l : letters_) {
    if (l > d) throw UsageError("letter x" + std::to_string(l) + " exceeds variable count");
    ++md[l - 1];
  }
  return md;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

Word Word::concat(const Word& other) const {
  Word w;
  w.letters_.reserve(letters_.size() + other.letters_.size());
  w.letters_ = letters_;
  w.letters_.insert(w.letters_.end(), other.letters_.begin(), other.letters_.end());
  return w;
}

Word& Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word& Word::push_back(Letter i) {
  if (i == 0) throw UsageError("word letters are 1-based");
  letters_.push_back(i);
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::size_t Word::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : letters_) {
    h ^= l;
    h *= 1099511628211ULL;
  }
  return h ^ letters_.size();
}

Word operator*(const Word& a, const Word& b) { return a.concat(b); }

std::vector<Word> words_of_degree(std::size_t d, std::size_t n) {
  std::vector<Word> out;
  if (d == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<Letter> cur(n, 1);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == d) {
      cur[i - 1] = 1;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

std::vector<Word> words_of_multidegree(std::span<const int> multidegree) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < multidegree.size(); ++i) {
    if (multidegree[i] < 0) throw UsageError("negative multidegree entry");
    letters.insert(letters.end(), static_cast<std::size_t>(multidegree[i]),
                   static_cast<Letter>(i + 1));
  }
  std::vector<Word> out;
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

namespace {

void compositions(std::size_t parts, int remaining, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.push_back(k);
    compositions(parts, remaining - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> multidegrees_of_degree(std::size_t d, std::size_t n) {
  std::vector<std::vector<int>> out;
  if (d == 0) return out;
  std::vector<int> cur;
  compositions(d, static_cast<int>(n), cur, out);
  return out;
}

}  // namespace ncinv
