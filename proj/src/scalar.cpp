#include "hopfsplit/scalar.hpp"

#include <charconv>
#include <ostream>

namespace hopfsplit {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  if (p > static_cast<std::uint64_t>(INT64_MAX)) throw FieldError("modulus too large");
  FieldSpec f;
  f.kind_ = Kind::prime_field;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
  }
  throw ParseError("invalid field '" + std::string(text) + "', expected Q or Fp:<p>");
}

std::string FieldSpec::str() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    mpz_class n;
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    if (s.empty() || n.set_str(s, 10) != 0) throw ParseError("invalid rational '" + std::string(text) + "'");
    return Rational(mpq_class(n));
  }
  mpz_class n, d;
  std::string ns(text.substr(0, slash));
  std::string ds(text.substr(slash + 1));
  if (ns.empty() || ds.empty() || n.set_str(ns, 10) != 0 || d.set_str(ds, 10) != 0) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Fp::Fp(long v, std::uint64_t p) : p_(p) {
  v_ = p == 0 ? v : static_cast<std::int64_t>(reduce(v, p));
}

std::uint64_t Fp::common_modulus(const Fp& a, const Fp& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) {
    throw FieldError("mixing residues modulo " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
  }
  return a.p_ != 0 ? a.p_ : b.p_;
}

Fp Fp::bound_to(std::uint64_t p) const {
  if (p == 0 || p_ == p) return *this;
  return Fp(v_, p);
}

Fp Fp::operator-() const {
  if (p_ == 0) return Fp(-v_);
  return Fp(v_ == 0 ? 0 : static_cast<long>(p_) - v_, p_);
}

Fp& Fp::operator+=(const Fp& o) {
  const std::uint64_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ += o.v_;
    return *this;
  }
  const auto a = static_cast<std::uint64_t>(bound_to(p).v_);
  const auto b = static_cast<std::uint64_t>(o.bound_to(p).v_);
  std::uint64_t s = a + b;
  if (s >= p) s -= p;
  v_ = static_cast<std::int64_t>(s);
  p_ = p;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  const std::uint64_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ *= o.v_;
    return *this;
  }
  const auto a = static_cast<std::uint64_t>(bound_to(p).v_);
  const auto b = static_cast<std::uint64_t>(o.bound_to(p).v_);
  v_ = static_cast<std::int64_t>(mul_mod(a, b, p));
  p_ = p;
  return *this;
}

Fp Fp::inverse() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw FieldError("cannot invert an unbound residue literal");
  }
  if (v_ == 0) throw std::domain_error("division by zero");
  return Fp(static_cast<long>(pow_mod(static_cast<std::uint64_t>(v_), p_ - 2, p_)), p_);
}

bool operator==(const Fp& a, const Fp& b) {
  const std::uint64_t p = Fp::common_modulus(a, b);
  if (p == 0) return a.v_ == b.v_;
  return a.bound_to(p).v_ == b.bound_to(p).v_;
}

std::string Fp::str() const { return std::to_string(v_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const Fp& r) { return os << r.str(); }

Rational ScalarTraits<Rational>::from_int(const FieldSpec& field, long v) {
  require_field<Rational>(field);
  return Rational(v);
}

Rational ScalarTraits<Rational>::parse(const FieldSpec& field, std::string_view text) {
  require_field<Rational>(field);
  return Rational::parse(text);
}

Fp ScalarTraits<Fp>::from_int(const FieldSpec& field, long v) {
  require_field<Fp>(field);
  return Fp(v, field.modulus());
}

Fp ScalarTraits<Fp>::parse(const FieldSpec& field, std::string_view text) {
  require_field<Fp>(field);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    // Reduce through GMP so arbitrarily long decimal text is accepted.
    mpz_class n;
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    if (s.empty() || n.set_str(s, 10) != 0) throw ParseError("invalid residue '" + std::string(text) + "'");
    mpz_class r = n % mpz_class(static_cast<unsigned long>(field.modulus()));
    if (r < 0) r += static_cast<unsigned long>(field.modulus());
    return Fp(static_cast<long>(r.get_ui()), field.modulus());
  }
  const Fp num = parse(field, text.substr(0, slash));
  const Fp den = parse(field, text.substr(slash + 1));
  if (den.is_zero()) throw ParseError("denominator vanishes modulo p in '" + std::string(text) + "'");
  return num / den;
}

}  // namespace hopfsplit
