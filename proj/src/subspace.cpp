#include "hopfsplit/subspace.hpp"

#include <map>

namespace hopfsplit {

namespace {

template <class S>
DenseMatrix<S> dense_zero(const FieldSpec& field, Eigen::Index rows, Eigen::Index cols) {
  return DenseMatrix<S>::Constant(rows, cols, scalar<S>(field, 0));
}

// Nonzero rows of f as a dense matrix (zero rows do not change the nullspace).
template <class S>
DenseMatrix<S> nonzero_rows(const LinMap<S>& f) {
  std::map<std::size_t, Eigen::Index> row_of;
  for (const auto& e : f.entries()) row_of.emplace(e.row, 0);
  Eigen::Index next = 0;
  for (auto& [r, i] : row_of) i = next++;
  DenseMatrix<S> d = dense_zero<S>(f.field(), next, static_cast<Eigen::Index>(f.cols()));
  for (const auto& e : f.entries()) d(row_of[e.row], static_cast<Eigen::Index>(e.col)) = e.value;
  return d;
}

}  // namespace

template <class S>
std::vector<std::size_t> rref(DenseMatrix<S>& a) {
  std::vector<std::size_t> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const S inv = a(row, col).inverse();
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const S c = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) {
        if (!is_zero(a(row, j))) a(i, j) -= c * a(row, j);
      }
    }
    pivots.push_back(static_cast<std::size_t>(col));
    ++row;
  }
  return pivots;
}

template <class S>
std::size_t rank(const LinMap<S>& f) {
  DenseMatrix<S> d = nonzero_rows(f);
  return rref(d).size();
}

template <class S>
Subspace<S>::Subspace(Space ambient, DenseMatrix<S> spanning, std::string name) : ambient_(std::move(ambient)) {
  if (static_cast<std::size_t>(spanning.cols()) != ambient_.dim()) {
    throw DimensionError("spanning vectors of length " + std::to_string(spanning.cols()) + " in space of dimension " +
                         std::to_string(ambient_.dim()));
  }
  pivots_ = rref(spanning);
  const auto k = static_cast<Eigen::Index>(pivots_.size());
  rows_ = spanning.topRows(k);
  for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
    for (Eigen::Index j = 0; j < rows_.cols(); ++j) rows_(i, j) = ScalarTraits<S>::bind(ambient_.field(), rows_(i, j));
  }
  const Space fresh = Space::base(ambient_.field(), std::move(name), pivots_.size());
  inclusion_ = LinMap<S>::from_dense(fresh, ambient_, rows_.transpose());
}

template <class S>
bool Subspace<S>::contains(const std::vector<S>& v) const {
  if (v.size() != ambient_.dim()) throw DimensionError("vector length does not match ambient dimension");
  std::vector<S> r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const S c = r[pivots_[i]];
    if (is_zero(c)) continue;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const S& b = rows_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (!is_zero(b)) r[j] -= c * b;
    }
  }
  for (const auto& x : r) {
    if (!is_zero(x)) return false;
  }
  return true;
}

template <class S>
bool Subspace<S>::contains_image(const LinMap<S>& f) const {
  if (f.rows() != ambient_.dim()) throw DimensionError("map codomain does not match ambient dimension");
  for (std::size_t j = 0; j < f.cols(); ++j) {
    std::vector<S> v(f.rows(), scalar<S>(ambient_.field(), 0));
    for (const auto& [r, x] : f.column(j)) v[r] = x;
    if (!contains(v)) return false;
  }
  return true;
}

template <class S>
bool Subspace<S>::contains(const Subspace& other) const {
  return contains_image(other.inclusion());
}

template <class S>
Subspace<S> kernel_of(const LinMap<S>& f, std::string name) {
  DenseMatrix<S> d = nonzero_rows(f);
  const auto pivots = rref(d);
  const std::size_t n = f.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  DenseMatrix<S> span = dense_zero<S>(f.field(), static_cast<Eigen::Index>(free.size()), static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    span(row, static_cast<Eigen::Index>(free[k])) = scalar<S>(f.field(), 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      span(row, static_cast<Eigen::Index>(pivots[i])) = -d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(free[k]));
    }
  }
  return Subspace<S>(f.domain(), std::move(span), std::move(name));
}

template <class S>
Subspace<S> equalizer(const LinMap<S>& f, const LinMap<S>& g, std::string name) {
  return kernel_of(f - g, std::move(name));
}

template <class S>
Subspace<S> image(const LinMap<S>& f, std::string name) {
  DenseMatrix<S> t = f.to_dense().transpose();
  return Subspace<S>(f.codomain(), std::move(t), std::move(name));
}

template <class S>
Subspace<S> intersection(const Subspace<S>& a, const Subspace<S>& b, std::string name) {
  // v = ι_a x lies in b iff the quotient projection by b kills it.
  const Quotient<S> q = quotient(b);
  const Subspace<S> k = kernel_of(q.projection * a.inclusion());
  return image(a.inclusion() * k.inclusion(), std::move(name));
}

template <class S>
Subspace<S> zero_subspace(const Space& ambient, std::string name) {
  return Subspace<S>(ambient, dense_zero<S>(ambient.field(), 0, static_cast<Eigen::Index>(ambient.dim())), std::move(name));
}

template <class S>
Subspace<S> whole_space(const Space& ambient, std::string name) {
  return image(identity<S>(ambient), std::move(name));
}

template <class S>
Quotient<S> quotient(const Subspace<S>& u, std::string name) {
  const Space& v = u.ambient();
  const std::size_t n = v.dim();
  std::vector<long> position(n, -1);
  std::vector<long> pivot_row(n, -1);
  for (std::size_t i = 0; i < u.pivots().size(); ++i) pivot_row[u.pivots()[i]] = static_cast<long>(i);
  std::vector<std::string> labels;
  std::size_t next = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot_row[j] < 0) {
      position[j] = static_cast<long>(next++);
      labels.push_back("[" + v.describe(j) + "]");
    }
  }
  Space q = Space::base(v.field(), std::move(name), next, std::move(labels));
  const S one = scalar<S>(v.field(), 1);
  auto proj = LinMap<S>::from_columns(v, q, [&](std::size_t j) {
    std::vector<std::pair<std::size_t, S>> col;
    if (pivot_row[j] < 0) {
      col.emplace_back(static_cast<std::size_t>(position[j]), one);
      return col;
    }
    // e_j ≡ e_j - u_r, which has no pivot coordinates left.
    const auto r = static_cast<Eigen::Index>(pivot_row[j]);
    for (std::size_t c = 0; c < n; ++c) {
      if (position[c] >= 0 && !is_zero(u.basis_rows()(r, static_cast<Eigen::Index>(c)))) {
        col.emplace_back(static_cast<std::size_t>(position[c]), -u.basis_rows()(r, static_cast<Eigen::Index>(c)));
      }
    }
    return col;
  });
  return Quotient<S>{std::move(q), std::move(proj)};
}

template <class S>
LinMap<S> invert(const LinMap<S>& f) {
  if (f.rows() != f.cols()) {
    throw DimensionError("cannot invert a " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + " map");
  }
  const auto n = static_cast<Eigen::Index>(f.rows());
  DenseMatrix<S> aug = dense_zero<S>(f.field(), n, 2 * n);
  aug.leftCols(n) = f.to_dense();
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = scalar<S>(f.field(), 1);
  const auto pivots = rref(aug);
  std::size_t r = 0;
  while (r < pivots.size() && pivots[r] < static_cast<std::size_t>(n)) ++r;
  if (r < static_cast<std::size_t>(n)) {
    throw SingularError("map " + f.domain().shape_str() + " -> " + f.codomain().shape_str() + " is singular (rank " +
                            std::to_string(rank(f)) + " of " + std::to_string(n) + ")",
                        rank(f), static_cast<std::size_t>(n));
  }
  return LinMap<S>::from_dense(f.codomain(), f.domain(), aug.rightCols(n));
}

template <class S>
LinMap<S> factor_through(const LinMap<S>& iota, const LinMap<S>& t) {
  if (!same_shape(iota.codomain(), t.codomain())) {
    throw DimensionError("cannot factor a map into " + t.codomain().shape_str() + " through one into " +
                         iota.codomain().shape_str());
  }
  const auto k = static_cast<Eigen::Index>(iota.cols());
  const auto c = static_cast<Eigen::Index>(t.cols());
  DenseMatrix<S> aug = dense_zero<S>(iota.field(), static_cast<Eigen::Index>(iota.rows()), k + c);
  aug.leftCols(k) = iota.to_dense();
  aug.rightCols(c) = t.to_dense();
  const auto pivots = rref(aug);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (static_cast<std::size_t>(i) >= pivots.size() || pivots[static_cast<std::size_t>(i)] != static_cast<std::size_t>(i)) {
      throw DimensionError("inclusion map does not have full column rank");
    }
  }
  if (pivots.size() > static_cast<std::size_t>(k)) {
    const std::size_t col = pivots[static_cast<std::size_t>(k)] - static_cast<std::size_t>(k);
    throw FactorizationError("column " + t.domain().describe(col) + " of the target is not in the image of the inclusion");
  }
  return LinMap<S>::from_dense(t.domain(), iota.domain(), aug.topRightCorner(k, c));
}

#define HOPFSPLIT_INSTANTIATE(S)                                                         \
  template std::vector<std::size_t> rref<S>(DenseMatrix<S>&);                             \
  template std::size_t rank<S>(const LinMap<S>&);                                         \
  template class Subspace<S>;                                                             \
  template Subspace<S> kernel_of<S>(const LinMap<S>&, std::string);                       \
  template Subspace<S> equalizer<S>(const LinMap<S>&, const LinMap<S>&, std::string);     \
  template Subspace<S> image<S>(const LinMap<S>&, std::string);                           \
  template Subspace<S> intersection<S>(const Subspace<S>&, const Subspace<S>&, std::string); \
  template Subspace<S> zero_subspace<S>(const Space&, std::string);                       \
  template Subspace<S> whole_space<S>(const Space&, std::string);                         \
  template Quotient<S> quotient<S>(const Subspace<S>&, std::string);                      \
  template LinMap<S> invert<S>(const LinMap<S>&);                                         \
  template LinMap<S> factor_through<S>(const LinMap<S>&, const LinMap<S>&);

HOPFSPLIT_INSTANTIATE(Rational)
HOPFSPLIT_INSTANTIATE(Fp)

}  // namespace hopfsplit
