#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfsplit/linmap.hpp"

namespace hopfsplit {

/// In-place reduced row echelon form. Pivot of each row is its first nonzero
/// column; returns the pivot columns in increasing order.
template <class S>
std::vector<std::size_t> rref(DenseMatrix<S>& a);

template <class S>
std::size_t rank(const LinMap<S>& f);

/// Subspace of a based space with a canonical basis: the reduced echelon form
/// of any spanning set, so two subspaces are equal iff their bases are.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  /// Rows of `spanning` are vectors of `ambient`.
  Subspace(Space ambient, DenseMatrix<S> spanning, std::string name = "U");

  const Space& ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  /// Inclusion map from a fresh k-dimensional space; its columns are the basis.
  const LinMap<S>& inclusion() const { return inclusion_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const DenseMatrix<S>& basis_rows() const { return rows_; }

  bool contains(const std::vector<S>& v) const;
  /// Every column of f lies in the subspace.
  bool contains_image(const LinMap<S>& f) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_.dim() == b.ambient_.dim() && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  Space ambient_;
  DenseMatrix<S> rows_;
  std::vector<std::size_t> pivots_;
  LinMap<S> inclusion_;
};

template <class S>
Subspace<S> kernel_of(const LinMap<S>& f, std::string name = "K");

/// Largest subspace of the common domain on which f and g agree.
template <class S>
Subspace<S> equalizer(const LinMap<S>& f, const LinMap<S>& g, std::string name = "E");

template <class S>
Subspace<S> image(const LinMap<S>& f, std::string name = "Im");

template <class S>
Subspace<S> intersection(const Subspace<S>& a, const Subspace<S>& b, std::string name = "U");

template <class S>
Subspace<S> zero_subspace(const Space& ambient, std::string name = "0");

template <class S>
Subspace<S> whole_space(const Space& ambient, std::string name = "V");

template <class S>
struct Quotient {
  Space space;
  LinMap<S> projection;
};

/// V/U with coordinates given by the non-pivot basis vectors of U's echelon form.
template <class S>
Quotient<S> quotient(const Subspace<S>& u, std::string name = "Q");

/// Exact inverse; DimensionError if not square, SingularError with rank otherwise.
template <class S>
LinMap<S> invert(const LinMap<S>& f);

/// The unique x with iota·x = t, for iota of full column rank. Throws
/// FactorizationError when some column of t is outside the image of iota.
template <class S>
LinMap<S> factor_through(const LinMap<S>& iota, const LinMap<S>& t);

}  // namespace hopfsplit
