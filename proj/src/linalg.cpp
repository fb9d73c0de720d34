#include "ncinv/linalg.hpp"

#include <algorithm>
#include <map>

#include "ncinv/errors.hpp"

namespace ncinv {

SparseVector make_sparse(std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.first > b.first; });
  SparseVector out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && is_zero(out.back().second)) out.pop_back();
  return out;
}

SparseVector add_scaled(const SparseVector& x, const Rational& a, const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first > y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first > x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + a * y[j].second;
      if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational dot(const SparseVector& x, const SparseVector& y) {
  Rational acc = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first > y[j].first) {
      ++i;
    } else if (y[j].first > x[i].first) {
      ++j;
    } else {
      acc += x[i++].second * y[j++].second;
    }
  }
  return acc;
}

EchelonBasis::EchelonBasis(std::size_t columns) : columns_(columns), pivot_row_(columns, -1) {}

SparseVector EchelonBasis::reduce_leading(SparseVector v) const {
  while (!v.empty()) {
    std::int32_t r = pivot_row_[v.front().first];
    if (r < 0) break;
    Rational f = -v.front().second;
    v = add_scaled(v, f, rows_[static_cast<std::size_t>(r)]);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  for (const auto& e : v) {
    if (e.first >= columns_) throw InternalError("sparse vector column out of range");
  }
  v = reduce_leading(std::move(v));
  if (v.empty()) return false;
  Rational inv = 1 / v.front().second;
  for (auto& e : v) e.second *= inv;
  pivot_row_[v.front().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  SparseVector out;
  // Walk v from its greatest column down, eliminating pivot columns.
  std::size_t i = 0;
  while (i < v.size()) {
    std::uint32_t c = v[i].first;
    std::int32_t r = c < columns_ ? pivot_row_[c] : -1;
    if (r < 0) {
      out.push_back(std::move(v[i]));
      ++i;
      continue;
    }
    Rational f = -v[i].second;
    SparseVector tail(std::make_move_iterator(v.begin() + static_cast<std::ptrdiff_t>(i)),
                      std::make_move_iterator(v.end()));
    v = add_scaled(tail, f, rows_[static_cast<std::size_t>(r)]);
    i = 0;
  }
  return out;
}

std::vector<std::uint32_t> EchelonBasis::pivot_columns() const {
  std::vector<std::uint32_t> cols;
  cols.reserve(rows_.size());
  for (const auto& r : rows_) cols.push_back(r.front().first);
  std::sort(cols.begin(), cols.end(), std::greater<>());
  return cols;
}

std::vector<SparseVector> EchelonBasis::reduced_rows() const {
  // Process rows by increasing leading column; each row only has entries
  // below its leading column, which are reduced by already-final rows.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows_[a].front().first < rows_[b].front().first;
  });
  std::vector<SparseVector> done(rows_.size());
  for (std::size_t idx : order) {
    const SparseVector& row = rows_[idx];
    SparseVector out;
    out.push_back(row.front());
    SparseVector v(row.begin() + 1, row.end());
    std::size_t i = 0;
    while (i < v.size()) {
      std::int32_t r = pivot_row_[v[i].first];
      if (r < 0) {
        out.push_back(std::move(v[i]));
        ++i;
        continue;
      }
      Rational f = -v[i].second;
      SparseVector tail(std::make_move_iterator(v.begin() + static_cast<std::ptrdiff_t>(i)),
                        std::make_move_iterator(v.end()));
      v = add_scaled(tail, f, done[static_cast<std::size_t>(r)]);
      i = 0;
    }
    done[idx] = std::move(out);
  }
  std::sort(done.begin(), done.end(), [](const SparseVector& a, const SparseVector& b) {
    return a.front().first > b.front().first;
  });
  return done;
}

std::optional<std::vector<Rational>> solve_linear_system(std::vector<SparseVector> rows,
                                                         std::size_t unknowns) {
  EchelonBasis ech(unknowns + 1);
  for (auto& row : rows) ech.insert(std::move(row));
  if (ech.is_pivot(0)) return std::nullopt;

  std::vector<Rational> solution(unknowns, Rational(0));
  for (const auto& row : ech.reduced_rows()) {
    std::size_t unknown = unknowns - row.front().first;
    if (row.back().first == 0) solution[unknown] = row.back().second;
  }
  return solution;
}

std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseVector>& vectors,
                                                       const SparseVector& target) {
  // One equation per coordinate.
  const std::size_t unknowns = vectors.size();
  std::map<std::uint32_t, std::vector<SparseEntry>> equations;
  for (std::size_t i = 0; i < unknowns; ++i) {
    for (const auto& [coord, val] : vectors[i]) {
      equations[coord].emplace_back(static_cast<std::uint32_t>(unknowns - i), val);
    }
  }
  for (const auto& [coord, val] : target) equations[coord].emplace_back(0u, val);

  std::vector<SparseVector> rows;
  rows.reserve(equations.size());
  for (auto& [coord, entries] : equations) rows.push_back(make_sparse(std::move(entries)));
  return solve_linear_system(std::move(rows), unknowns);
}

}  // namespace ncinv
