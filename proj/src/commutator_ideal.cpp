#include <algorithm>
#include <functional>

#include "ncinv/errors.hpp"
#include "ncinv/tideal.hpp"

namespace ncinv {

namespace {

// Row-reduced span, inside one block's quotient, of the products
// w0 [a1, b1] w1 ... [ap, bp] wp (a_i < b_i) lying in the block.
EchelonBasis commutator_power_block(const MultidegreeComponent& block, unsigned p) {
  EchelonBasis span(block.words().size());
  const std::size_t n = block.degree();
  const std::size_t target_rank = block.quotient_dimension();
  if (2 * static_cast<std::size_t>(p) > n || target_rank == 0) return span;

  std::vector<std::size_t> starts;
  std::vector<Letter> buffer(n);
  // A spanning product is identified with its leading word W together with
  // the positions of its p bracket pairs.
  auto emit = [&](const Word& W) {
    std::vector<SparseEntry> entries;
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
      for (std::size_t t = 0; t < n; ++t) buffer[t] = W[t];
      bool negative = false;
      for (unsigned q = 0; q < p; ++q) {
        if ((mask >> q) & 1u) {
          std::swap(buffer[starts[q]], buffer[starts[q] + 1]);
          negative = !negative;
        }
      }
      auto col = block.column(Word(buffer));
      entries.emplace_back(*col, negative ? Rational(-1) : Rational(1));
    }
    span.insert(block.reduce(make_sparse(std::move(entries))));
  };

  for (const Word& W : block.words()) {
    if (span.rank() == target_rank) break;
    // Enumerate p disjoint adjacent pairs (t, t+1) with W[t] < W[t+1].
    starts.clear();
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
      if (starts.size() == p) {
        emit(W);
        return;
      }
      for (std::size_t t = from; t + 1 < n; ++t) {
        if (W[t] < W[t + 1]) {
          starts.push_back(t);
          choose(t + 2);
          starts.pop_back();
        }
      }
    };
    choose(0);
  }
  return span;
}

}  // namespace

std::vector<NCPoly> commutator_power_component(const RelativelyFreeAlgebra& algebra, unsigned p,
                                               std::size_t n) {
  if (p == 0) throw UsageError("commutator power needs p >= 1");
  DegreeComponent comp = algebra.component(n);
  const auto& blocks = comp.blocks();
  std::vector<std::vector<NCPoly>> parts(blocks.size());
  parallel_for(blocks.size(), algebra.options().threads, [&](std::size_t i) {
    EchelonBasis span = commutator_power_block(*blocks[i], p);
    for (const auto& row : span.reduced_rows()) parts[i].push_back(blocks[i]->to_poly(row));
  });
  std::vector<NCPoly> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::size_t commutator_power_dimension(const RelativelyFreeAlgebra& algebra, unsigned p,
                                       std::size_t n) {
  if (p == 0) throw UsageError("commutator power needs p >= 1");
  DegreeComponent comp = algebra.component(n);
  const auto& blocks = comp.blocks();
  std::vector<std::size_t> ranks(blocks.size(), 0);
  parallel_for(blocks.size(), algebra.options().threads, [&](std::size_t i) {
    ranks[i] = commutator_power_block(*blocks[i], p).rank();
  });
  std::size_t total = 0;
  for (auto r : ranks) total += r;
  return total;
}

NilpotencyResult nilpotency_class_up_to(const RelativelyFreeAlgebra& algebra, std::size_t cap,
                                        unsigned p_max) {
  for (unsigned p = 1; p <= p_max; ++p) {
    if (2 * static_cast<std::size_t>(p) > cap) return {std::nullopt, p, cap};
    bool vanishes = true;
    for (std::size_t n = 2 * static_cast<std::size_t>(p); n <= cap && vanishes; ++n) {
      vanishes = commutator_power_dimension(algebra, p, n) == 0;
    }
    if (vanishes) return {p, p, cap};
  }
  return {std::nullopt, p_max + 1, cap};
}

}  // namespace ncinv
