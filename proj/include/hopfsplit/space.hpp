#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfsplit/scalar.hpp"

namespace hopfsplit {

/// A named based vector space; one tensor factor of a Space.
struct Factor {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> labels;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// An ordered tensor word of based spaces over one field. The empty word is
/// the unit object I of dimension 1; tensoring concatenates words, so I is a
/// strict unit.
class Space {
 public:
  Space() = default;
  explicit Space(FieldSpec field) : field_(field) {}
  Space(FieldSpec field, std::vector<Factor> factors);

  /// A single based space; labels default to e0, e1, ...
  static Space base(FieldSpec field, std::string name, std::size_t dim,
                    std::vector<std::string> labels = {});
  static Space unit(FieldSpec field) { return Space(field); }

  const FieldSpec& field() const { return field_; }
  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t dim() const;
  bool is_unit() const { return factors_.empty(); }

  /// Dimensions of the factors, skipping those of dimension 1.
  std::vector<std::size_t> shape() const;
  std::string shape_str() const;
  std::string name() const;

  /// Row-major multi-index of a flat basis index.
  std::vector<std::size_t> unflatten(std::size_t index) const;
  /// Basis label of a flat index, e.g. "r⊗s".
  std::string describe(std::size_t index) const;

  /// The same word collapsed into one factor (labels joined by ⊗).
  Space flattened(std::string name) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  FieldSpec field_;
  std::vector<Factor> factors_;
};

Space tensor(const Space& a, const Space& b);

template <class... Rest>
Space tensor(const Space& a, const Space& b, const Rest&... rest) {
  return tensor(tensor(a, b), rest...);
}

/// Same field, same total dimension and same factor shape (names ignored).
bool same_shape(const Space& a, const Space& b);

}  // namespace hopfsplit
