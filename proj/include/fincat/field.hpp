#pragma once

// Exact scalars: residues modulo a prime p < 2^31 and arbitrary-precision
// rationals. Both expose the same small interface so every algorithm in the
// library is a template over the scalar type.

#include <concepts>
#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fincat {

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/// Element of the prime field F_p. The modulus travels with the value so that
/// mixing fields is detected at the first arithmetic operation.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("Fp: modulus must be a prime >= 2");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp zero() const { return raw(0, p_); }
  Fp one() const { return raw(1, p_); }
  Fp from_int(std::int64_t n) const { return Fp(n, p_); }
  /// Reduces n/d into the field; throws if p divides d.
  Fp from_fraction(std::int64_t n, std::int64_t d) const {
    Fp den(d, p_);
    if (den.is_zero()) throw std::domain_error("Fp: denominator divisible by p");
    return Fp(n, p_) / den;
  }
  std::uint32_t characteristic() const { return p_; }

  Fp operator+(const Fp& o) const {
    check(o);
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    if (s >= p_) s -= p_;
    return raw(static_cast<std::uint32_t>(s), p_);
  }
  Fp operator-(const Fp& o) const {
    check(o);
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_), p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator*(const Fp& o) const {
    check(o);
    return raw(static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_), p_);
  }
  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0, p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string to_string() const { return std::to_string(v_); }
  std::string field_name() const { return "F_" + std::to_string(p_); }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  void check(const Fp& o) const {
    if (p_ != o.p_) throw FieldMismatch("Fp: operands from different prime fields");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

/// Rational number in lowest terms with positive denominator (gmp backed).
class Rational {
 public:
  Rational() = default;
  explicit Rational(std::int64_t n) : v_(static_cast<long>(n)) {}
  Rational(std::int64_t n, std::int64_t d) : v_(static_cast<long>(n), static_cast<long>(d)) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const { return Rational(n); }
  Rational from_fraction(std::int64_t n, std::int64_t d) const { return Rational(n, d); }
  std::uint32_t characteristic() const { return 0; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }
  Rational operator/(const Rational& o) const { return *this * o.inverse(); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string to_string() const { return v_.get_str(); }
  std::string field_name() const { return "Q"; }

 private:
  mpq_class v_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

template <class K>
concept ExactField = requires(const K& a, std::int64_t n) {
  { a + a } -> std::same_as<K>;
  { a * a } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.zero() } -> std::same_as<K>;
  { a.one() } -> std::same_as<K>;
  { a.from_int(n) } -> std::same_as<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.characteristic() } -> std::convertible_to<std::uint32_t>;
};

}  // namespace fincat
