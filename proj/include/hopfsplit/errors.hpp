#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfsplit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible shapes between maps, spaces or structures.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Scalars or spaces from different ground fields were mixed, or a modulus is not prime.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// A square map that has no inverse. Carries the rank as a witness.
class SingularError : public Error {
 public:
  SingularError(const std::string& what, std::size_t rank, std::size_t size)
      : Error(what), rank_(rank), size_(size) {}
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return size_; }

 private:
  std::size_t rank_;
  std::size_t size_;
};

/// A target map does not factor through a given monomorphism.
class FactorizationError : public Error {
 public:
  using Error::Error;
};

/// The kernel condition required to build a split extension from a split epimorphism fails.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A multiplication table cannot be linearized (no unit, broken inverses, bad entries).
class MagmaError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Data that passed verification violates an identity that verification implies.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed structure/action/extension file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfsplit
