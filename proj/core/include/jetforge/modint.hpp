#pragma once

#include <cstdint>
#include <ostream>

namespace jetforge {

bool is_prime(std::uint64_t n);

/// Coefficient domain tag for residues modulo a prime.
struct ModularDomain {
  std::uint32_t modulus = 0;
  friend bool operator==(ModularDomain, ModularDomain) = default;
};

/// Residue modulo a prime, stored as its canonical representative in [0, q).
/// Arithmetic between residues of different moduli throws DomainError.
class ModInt {
 public:
  using Domain = ModularDomain;

  /// Validates that the modulus is prime; throws InputError otherwise.
  static Domain domain_for(std::uint32_t modulus);

  ModInt() = default;
  ModInt(std::int64_t value, Domain domain);

  static ModInt zero(Domain d) { return ModInt(0, d); }
  static ModInt one(Domain d) { return ModInt(1, d); }
  static ModInt from_integer(long n, Domain d) { return ModInt(n, d); }
  Domain domain() const { return {modulus_}; }

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  ModInt inverse() const;
  ModInt pow(std::uint64_t exponent) const;

  friend ModInt operator+(ModInt a, ModInt b);
  friend ModInt operator-(ModInt a, ModInt b);
  friend ModInt operator*(ModInt a, ModInt b);
  ModInt operator-() const;

  ModInt& operator+=(ModInt o) { return *this = *this + o; }
  ModInt& operator-=(ModInt o) { return *this = *this - o; }
  ModInt& operator*=(ModInt o) { return *this = *this * o; }

  friend bool operator==(ModInt a, ModInt b);

  friend std::ostream& operator<<(std::ostream& os, ModInt r) { return os << r.value_; }

 private:
  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

}  // namespace jetforge
