#pragma once

// Linear maps between tensor words of based spaces, stored as pruned sparse
// column-major matrices. Tensor index convention: basis (i, j) of V⊗W sits at
// flat index i*dim(W) + j.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>

#include "hopfsplit/space.hpp"

namespace hopfsplit {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
struct Entry {
  std::size_t row;
  std::size_t col;
  S value;
};

template <class S>
class LinMap {
 public:
  using Scalar = S;
  using Matrix = Eigen::SparseMatrix<S, Eigen::ColMajor>;

  LinMap() = default;
  LinMap(Space domain, Space codomain, Matrix m) : dom_(std::move(domain)), cod_(std::move(codomain)), m_(std::move(m)) {
    require_field<S>(dom_.field());
    if (!(dom_.field() == cod_.field())) {
      throw FieldError("map between spaces over " + dom_.field().str() + " and " + cod_.field().str());
    }
    if (static_cast<std::size_t>(m_.rows()) != cod_.dim() || static_cast<std::size_t>(m_.cols()) != dom_.dim()) {
      throw DimensionError("matrix is " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) +
                           " but map is " + dom_.shape_str() + " -> " + cod_.shape_str());
    }
    normalize();
  }

  /// Duplicate (row, col) pairs are summed.
  static LinMap from_entries(Space domain, Space codomain, const std::vector<Entry<S>>& entries) {
    std::vector<Eigen::Triplet<S>> t;
    t.reserve(entries.size());
    for (const auto& e : entries) {
      if (e.row >= codomain.dim() || e.col >= domain.dim()) {
        throw DimensionError("entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                             ") out of bounds for " + domain.shape_str() + " -> " + codomain.shape_str());
      }
      t.emplace_back(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col), e.value);
    }
    Matrix m(static_cast<Eigen::Index>(codomain.dim()), static_cast<Eigen::Index>(domain.dim()));
    m.setFromTriplets(t.begin(), t.end());
    return LinMap(std::move(domain), std::move(codomain), std::move(m));
  }

  /// column(j) returns the image of basis vector j as (row, value) pairs.
  template <class F>
  static LinMap from_columns(Space domain, Space codomain, F&& column) {
    std::vector<Entry<S>> entries;
    for (std::size_t j = 0; j < domain.dim(); ++j) {
      for (auto&& [r, v] : column(j)) entries.push_back({static_cast<std::size_t>(r), j, S(v)});
    }
    return from_entries(std::move(domain), std::move(codomain), entries);
  }

  static LinMap from_dense(Space domain, Space codomain, const DenseMatrix<S>& d) {
    std::vector<Entry<S>> entries;
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      for (Eigen::Index i = 0; i < d.rows(); ++i) {
        if (!is_zero(d(i, j))) entries.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), d(i, j)});
      }
    }
    return from_entries(std::move(domain), std::move(codomain), entries);
  }

  const Space& domain() const { return dom_; }
  const Space& codomain() const { return cod_; }
  const FieldSpec& field() const { return dom_.field(); }
  const Matrix& matrix() const { return m_; }
  std::size_t rows() const { return cod_.dim(); }
  std::size_t cols() const { return dom_.dim(); }
  std::size_t nonzeros() const { return static_cast<std::size_t>(m_.nonZeros()); }

  S coeff(std::size_t row, std::size_t col) const {
    return ScalarTraits<S>::bind(field(), m_.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)));
  }

  /// Nonzero entries in column-major order.
  std::vector<Entry<S>> entries() const {
    std::vector<Entry<S>> out;
    out.reserve(nonzeros());
    for (Eigen::Index k = 0; k < m_.outerSize(); ++k) {
      for (typename Matrix::InnerIterator it(m_, k); it; ++it) {
        out.push_back({static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()), it.value()});
      }
    }
    return out;
  }

  S entry(std::size_t row, std::size_t col) const {
    const S v = m_.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    return is_zero(v) ? scalar<S>(field(), 0) : v;
  }

  /// Image of basis vector j as (row, value) pairs.
  std::vector<std::pair<std::size_t, S>> column(std::size_t j) const {
    std::vector<std::pair<std::size_t, S>> out;
    for (typename Matrix::InnerIterator it(m_, static_cast<Eigen::Index>(j)); it; ++it) {
      out.emplace_back(static_cast<std::size_t>(it.row()), it.value());
    }
    return out;
  }

  DenseMatrix<S> to_dense() const {
    DenseMatrix<S> d = DenseMatrix<S>::Constant(m_.rows(), m_.cols(), scalar<S>(field(), 0));
    for (const auto& e : entries()) d(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
    return d;
  }

  /// Same matrix viewed between different words of equal total dimension.
  LinMap reshaped(Space domain, Space codomain) const {
    if (domain.dim() != dom_.dim() || codomain.dim() != cod_.dim()) {
      throw DimensionError("cannot reshape " + dom_.shape_str() + " -> " + cod_.shape_str() + " to " +
                           domain.shape_str() + " -> " + codomain.shape_str());
    }
    return LinMap(std::move(domain), std::move(codomain), m_);
  }

  LinMap with_entry(std::size_t row, std::size_t col, const S& value) const {
    Matrix m = m_;
    m.coeffRef(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = value;
    return LinMap(dom_, cod_, std::move(m));
  }

 private:
  void normalize() {
    const FieldSpec f = field();
    m_.prune([](Eigen::Index, Eigen::Index, const S& v) { return !is_zero(v); });
    for (Eigen::Index k = 0; k < m_.outerSize(); ++k) {
      for (typename Matrix::InnerIterator it(m_, k); it; ++it) it.valueRef() = ScalarTraits<S>::bind(f, it.value());
    }
    m_.makeCompressed();
  }

  Space dom_;
  Space cod_;
  Matrix m_;
};

template <class S>
LinMap<S> identity(const Space& v) {
  const S one = scalar<S>(v.field(), 1);
  return LinMap<S>::from_columns(v, v, [&](std::size_t j) { return std::vector<std::pair<std::size_t, S>>{{j, one}}; });
}

template <class S>
LinMap<S> zero_map(const Space& domain, const Space& codomain) {
  return LinMap<S>::from_entries(domain, codomain, {});
}

/// σ_{X,Y}: X⊗Y → Y⊗X, basis (i, j) ↦ (j, i).
template <class S>
LinMap<S> symmetry(const Space& x, const Space& y) {
  const std::size_t dx = x.dim();
  const std::size_t dy = y.dim();
  const S one = scalar<S>(x.field(), 1);
  return LinMap<S>::from_columns(tensor(x, y), tensor(y, x), [&](std::size_t c) {
    return std::vector<std::pair<std::size_t, S>>{{(c % dy) * dx + c / dy, one}};
  });
}

/// g·f. Shapes must agree up to names and dimension-1 factors.
template <class S>
LinMap<S> compose(const LinMap<S>& g, const LinMap<S>& f) {
  if (!(f.field() == g.field())) {
    throw FieldError("composing maps over " + f.field().str() + " and " + g.field().str());
  }
  if (!same_shape(f.codomain(), g.domain())) {
    throw DimensionError("cannot compose: codomain " + f.codomain().shape_str() + " vs domain " +
                         g.domain().shape_str());
  }
  typename LinMap<S>::Matrix m = g.matrix() * f.matrix();
  return LinMap<S>(f.domain(), g.codomain(), std::move(m));
}

template <class S>
LinMap<S> operator*(const LinMap<S>& g, const LinMap<S>& f) {
  return compose(g, f);
}

template <class S>
LinMap<S> tensor(const LinMap<S>& f, const LinMap<S>& g) {
  if (!(f.field() == g.field())) throw FieldError("tensoring maps over different fields");
  typename LinMap<S>::Matrix m = Eigen::kroneckerProduct(f.matrix(), g.matrix()).eval();
  return LinMap<S>(tensor(f.domain(), g.domain()), tensor(f.codomain(), g.codomain()), std::move(m));
}

template <class S, class... Rest>
LinMap<S> tensor(const LinMap<S>& f, const LinMap<S>& g, const LinMap<S>& h, const Rest&... rest) {
  return tensor(tensor(f, g), h, rest...);
}

template <class S>
void require_parallel(const LinMap<S>& f, const LinMap<S>& g, const char* op) {
  if (!same_shape(f.domain(), g.domain()) || !same_shape(f.codomain(), g.codomain())) {
    throw DimensionError(std::string(op) + " of maps " + f.domain().shape_str() + " -> " + f.codomain().shape_str() +
                         " and " + g.domain().shape_str() + " -> " + g.codomain().shape_str());
  }
}

template <class S>
LinMap<S> operator+(const LinMap<S>& f, const LinMap<S>& g) {
  require_parallel(f, g, "sum");
  typename LinMap<S>::Matrix m = f.matrix() + g.matrix();
  return LinMap<S>(f.domain(), f.codomain(), std::move(m));
}

template <class S>
LinMap<S> operator-(const LinMap<S>& f, const LinMap<S>& g) {
  require_parallel(f, g, "difference");
  typename LinMap<S>::Matrix m = f.matrix() - g.matrix();
  return LinMap<S>(f.domain(), f.codomain(), std::move(m));
}

template <class S>
LinMap<S> scaled(const S& c, const LinMap<S>& f) {
  typename LinMap<S>::Matrix m = f.matrix() * c;
  return LinMap<S>(f.domain(), f.codomain(), std::move(m));
}

template <class S>
struct Difference {
  std::size_t row;
  std::size_t col;
  S lhs;
  S rhs;
};

/// First entry where f and g differ: lowest column, then lowest row.
template <class S>
std::optional<Difference<S>> first_difference(const LinMap<S>& f, const LinMap<S>& g) {
  const LinMap<S> d = f - g;
  if (d.nonzeros() == 0) return std::nullopt;
  const auto& m = d.matrix();
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    typename LinMap<S>::Matrix::InnerIterator it(m, k);
    if (it) {
      const auto r = static_cast<std::size_t>(it.row());
      const auto c = static_cast<std::size_t>(it.col());
      return Difference<S>{r, c, f.coeff(r, c), g.coeff(r, c)};
    }
  }
  return std::nullopt;
}

template <class S>
bool operator==(const LinMap<S>& f, const LinMap<S>& g) {
  if (!same_shape(f.domain(), g.domain()) || !same_shape(f.codomain(), g.codomain())) return false;
  return !first_difference(f, g).has_value();
}

}  // namespace hopfsplit
