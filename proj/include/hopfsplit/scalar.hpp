#pragma once

// Exact scalars: arbitrary-precision rationals and residues modulo a prime.
// Both types satisfy Eigen's NumTraits so they can live inside sparse and dense
// Eigen matrices.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include <Eigen/Core>

#include "hopfsplit/errors.hpp"

namespace hopfsplit {

/// The ground field K: either Q or GF(p) with p prime.
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws FieldError unless p is prime.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  std::uint64_t characteristic() const { return p_; }
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT: integer literals are scalars
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "n" or "n/d" in decimal; result is in lowest terms.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  std::string str() const { return q_.get_str(); }
  const mpq_class& get() const { return q_; }
  Rational inverse() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

/// Residue modulo a prime. The modulus travels with the value; a value built
/// from a bare integer (modulus 0) is an unbound literal that adopts the
/// modulus of whatever it is combined with. Eigen creates such literals for 0
/// and 1 internally.
class Fp {
 public:
  Fp() = default;
  Fp(long v) : v_(v) {}  // NOLINT: integer literals are scalars
  Fp(long v, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  /// Representative in [0, p) for bound values, the raw literal otherwise.
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::string str() const;
  Fp inverse() const;

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o) { return *this += -o; }
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b);

 private:
  Fp bound_to(std::uint64_t p) const;
  static std::uint64_t common_modulus(const Fp& a, const Fp& b);

  std::int64_t v_ = 0;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const Fp& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Fp& r) { return r.is_zero(); }
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Fp& r) { return r.str(); }

/// Per-type glue between a FieldSpec and the scalar representation.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::rationals;
  static Rational from_int(const FieldSpec& field, long v);
  static Rational parse(const FieldSpec& field, std::string_view text);
  static Rational bind(const FieldSpec&, const Rational& v) { return v; }
};

template <>
struct ScalarTraits<Fp> {
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::prime_field;
  static Fp from_int(const FieldSpec& field, long v);
  static Fp parse(const FieldSpec& field, std::string_view text);
  static Fp bind(const FieldSpec& field, const Fp& v) {
    return v.modulus() == 0 ? Fp(v.value(), field.modulus()) : v;
  }
};

template <class S>
S scalar(const FieldSpec& field, long v) {
  return ScalarTraits<S>::from_int(field, v);
}

template <class S>
S parse_scalar(const FieldSpec& field, std::string_view text) {
  return ScalarTraits<S>::parse(field, text);
}

template <class S>
void require_field(const FieldSpec& field) {
  if (field.kind() != ScalarTraits<S>::kind) {
    throw FieldError("scalar type does not match field " + field.str());
  }
}

/// Calls fn.template operator()<S>() with the scalar type matching the field.
template <class F>
decltype(auto) visit_field(const FieldSpec& field, F&& fn) {
  if (field.is_rational()) return std::forward<F>(fn).template operator()<Rational>();
  return std::forward<F>(fn).template operator()<Fp>();
}

}  // namespace hopfsplit

namespace Eigen {

template <>
struct NumTraits<hopfsplit::Rational> : GenericNumTraits<hopfsplit::Rational> {
  using Real = hopfsplit::Rational;
  using NonInteger = hopfsplit::Rational;
  using Nested = hopfsplit::Rational;
  using Literal = hopfsplit::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static hopfsplit::Rational epsilon() { return hopfsplit::Rational(0); }
  static hopfsplit::Rational dummy_precision() { return hopfsplit::Rational(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<hopfsplit::Fp> : GenericNumTraits<hopfsplit::Fp> {
  using Real = hopfsplit::Fp;
  using NonInteger = hopfsplit::Fp;
  using Nested = hopfsplit::Fp;
  using Literal = hopfsplit::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static hopfsplit::Fp epsilon() { return hopfsplit::Fp(0); }
  static hopfsplit::Fp dummy_precision() { return hopfsplit::Fp(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
