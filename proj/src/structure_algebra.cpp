#include "ncinv/structure_algebra.hpp"

#include "ncinv/errors.hpp"

namespace ncinv {

CommPoly CommPoly::constant(std::size_t nvars, const Rational& c) {
  CommPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

CommPoly CommPoly::indeterminate(std::size_t nvars, std::size_t i) {
  CommPoly p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

void CommPoly::add_term(const Exponents& e, const Rational& c) {
  if (ncinv::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (ncinv::is_zero(it->second)) terms_.erase(it);
  }
}

CommPoly& CommPoly::operator+=(const CommPoly& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
  if (ncinv::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out(std::max(a.nvars_, b.nvars_));
  CommPoly::Exponents e(out.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = static_cast<std::uint16_t>((i < ea.size() ? ea[i] : 0) +
                                          (i < eb.size() ? eb[i] : 0));
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

StructureAlgebra::StructureAlgebra(std::vector<std::vector<Vector>> constants,
                                   std::optional<Vector> unit)
    : dim_(constants.size()), unit_(std::move(unit)) {
  if (dim_ == 0) throw UsageError("structure algebra must have positive dimension");
  c_.assign(dim_ * dim_ * dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (constants[i].size() != dim_) throw UsageError("structure constants must be dim x dim x dim");
    for (std::size_t j = 0; j < dim_; ++j) {
      if (constants[i][j].size() != dim_) {
        throw UsageError("structure constants must be dim x dim x dim");
      }
      for (std::size_t k = 0; k < dim_; ++k) c_[(i * dim_ + j) * dim_ + k] = constants[i][j][k];
    }
  }
  // (e_i e_j) e_l == e_i (e_j e_l) for every basis triple.
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t l = 0; l < dim_; ++l) {
        for (std::size_t m = 0; m < dim_; ++m) {
          Rational lhs = 0;
          Rational rhs = 0;
          for (std::size_t k = 0; k < dim_; ++k) {
            lhs += constant(i, j, k) * constant(k, l, m);
            rhs += constant(j, l, k) * constant(i, k, m);
          }
          if (lhs != rhs) {
            throw UsageError("structure constants are not associative at basis triple (" +
                             std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(l) + ")");
          }
        }
      }
    }
  }
  if (unit_) {
    if (unit_->size() != dim_) throw UsageError("unit has wrong dimension");
    for (std::size_t i = 0; i < dim_; ++i) {
      Vector e = basis_vector(i);
      if (multiply(*unit_, e) != e || multiply(e, *unit_) != e) {
        throw UsageError("declared unit is not a two-sided identity");
      }
    }
  }
}

StructureAlgebra::Vector StructureAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim_, Rational(0));
  v[i] = 1;
  return v;
}

StructureAlgebra::Vector StructureAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (ncinv::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (ncinv::is_zero(b[j])) continue;
      Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = constant(i, j, k);
        if (!ncinv::is_zero(c)) out[k] += ab * c;
      }
    }
  }
  return out;
}

namespace {

using Constants = std::vector<std::vector<StructureAlgebra::Vector>>;

Constants zero_constants(std::size_t dim) {
  return Constants(dim, std::vector<StructureAlgebra::Vector>(
                            dim, StructureAlgebra::Vector(dim, Rational(0))));
}

// Basis element of a matrix-unit algebra: row, column and t-power.
struct MatrixUnit {
  int row;
  int col;
  unsigned tpow;
};

StructureAlgebra from_matrix_units(const std::vector<MatrixUnit>& basis, unsigned nilpotency) {
  const std::size_t dim = basis.size();
  Constants c = zero_constants(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& a = basis[i];
      const auto& b = basis[j];
      if (a.col != b.row) continue;
      unsigned p = a.tpow + b.tpow;
      if (p >= nilpotency) continue;
      for (std::size_t k = 0; k < dim; ++k) {
        if (basis[k].row == a.row && basis[k].col == b.col && basis[k].tpow == p) c[i][j][k] = 1;
      }
    }
  }
  StructureAlgebra::Vector unit(dim, Rational(0));
  for (std::size_t k = 0; k < dim; ++k) {
    if (basis[k].row == basis[k].col && basis[k].tpow == 0) unit[k] = 1;
  }
  return StructureAlgebra(std::move(c), std::move(unit));
}

}  // namespace

StructureAlgebra StructureAlgebra::matrices_2x2() {
  return from_matrix_units({{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}}, 1);
}

StructureAlgebra StructureAlgebra::upper_triangular_2x2() {
  return from_matrix_units({{0, 0, 0}, {0, 1, 0}, {1, 1, 0}}, 1);
}

StructureAlgebra StructureAlgebra::rk_algebra(unsigned k) {
  if (k == 0) throw UsageError("R_k needs k >= 1");
  std::vector<MatrixUnit> basis;
  for (unsigned a = 0; a < k; ++a) basis.push_back({0, 0, a});
  for (unsigned a = 0; a < k; ++a) basis.push_back({1, 1, a});
  for (unsigned b = 1; b < k; ++b) basis.push_back({0, 1, b});
  for (unsigned b = 1; b < k; ++b) basis.push_back({1, 0, b});
  return from_matrix_units(basis, k);
}

StructureAlgebra StructureAlgebra::field() {
  Constants c = zero_constants(1);
  c[0][0][0] = 1;
  return StructureAlgebra(std::move(c), Vector{Rational(1)});
}

std::vector<CommPoly> evaluate_generic(const NCPoly& f, const StructureAlgebra& algebra) {
  const std::size_t dim = algebra.dim();
  const std::size_t d = f.max_letter();
  const std::size_t nvars = d * dim;
  std::vector<std::vector<CommPoly>> values(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t b = 0; b < dim; ++b) {
      values[i].push_back(CommPoly::indeterminate(nvars, i * dim + b));
    }
  }
  std::vector<CommPoly> total(dim, CommPoly(nvars));
  for (const auto& [w, coef] : f.terms()) {
    std::vector<CommPoly> acc;
    if (w.empty()) {
      if (!algebra.unit()) {
        throw UsageError("polynomial has a constant term but the algebra has no unit");
      }
      for (std::size_t k = 0; k < dim; ++k) {
        acc.push_back(CommPoly::constant(nvars, (*algebra.unit())[k]));
      }
    } else {
      acc = values[w[0] - 1];
      for (std::size_t pos = 1; pos < w.degree(); ++pos) {
        const auto& v = values[w[pos] - 1];
        std::vector<CommPoly> next(dim, CommPoly(nvars));
        for (std::size_t i = 0; i < dim; ++i) {
          if (acc[i].is_zero()) continue;
          for (std::size_t j = 0; j < dim; ++j) {
            if (v[j].is_zero()) continue;
            CommPoly ab;
            bool computed = false;
            for (std::size_t k = 0; k < dim; ++k) {
              const Rational& c = algebra.constant(i, j, k);
              if (ncinv::is_zero(c)) continue;
              if (!computed) {
                ab = acc[i] * v[j];
                computed = true;
              }
              CommPoly term = ab;
              term *= c;
              next[k] += term;
            }
          }
        }
        acc = std::move(next);
      }
    }
    for (std::size_t k = 0; k < dim; ++k) {
      CommPoly term = acc[k];
      term *= coef;
      total[k] += term;
    }
  }
  return total;
}

bool holds_in_algebra(const NCPoly& f, const StructureAlgebra& algebra) {
  for (const auto& coord : evaluate_generic(f, algebra)) {
    if (!coord.is_zero()) return false;
  }
  return true;
}

StructureAlgebra::Vector evaluate(const NCPoly& f, const StructureAlgebra& algebra,
                                  const std::vector<StructureAlgebra::Vector>& values) {
  if (f.max_letter() > values.size()) throw UsageError("not enough values for evaluation");
  StructureAlgebra::Vector total(algebra.dim(), Rational(0));
  for (const auto& [w, coef] : f.terms()) {
    StructureAlgebra::Vector acc;
    if (w.empty()) {
      if (!algebra.unit()) {
        throw UsageError("polynomial has a constant term but the algebra has no unit");
      }
      acc = *algebra.unit();
    } else {
      acc = values[w[0] - 1];
      for (std::size_t pos = 1; pos < w.degree(); ++pos) {
        acc = algebra.multiply(acc, values[w[pos] - 1]);
      }
    }
    for (std::size_t k = 0; k < algebra.dim(); ++k) total[k] += coef * acc[k];
  }
  return total;
}

}  // namespace ncinv
