#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace jetforge {

/// Coefficient domain tag for exact rationals. All rationals share one domain.
struct RationalDomain {
  friend bool operator==(RationalDomain, RationalDomain) = default;
};

/// Arbitrary-precision rational number, always in lowest terms.
class Rational {
 public:
  using Domain = RationalDomain;

  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p" or "p/q" in base 10.
  static Rational from_string(std::string_view text);

  static Rational zero(Domain = {}) { return Rational(); }
  static Rational one(Domain = {}) { return Rational(1); }
  static Rational from_integer(long n, Domain = {}) { return Rational(n); }
  Domain domain() const { return {}; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;

  std::string to_string() const { return value_.get_str(); }

  /// Residue of this rational modulo a prime; throws DomainError when the
  /// denominator is divisible by the prime.
  std::uint32_t residue(std::uint32_t prime) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.value_; }

 private:
  mpq_class value_;
};

}  // namespace jetforge
