#include "jetforge/modint.hpp"

#include <string>

#include "jetforge/error.hpp"

namespace jetforge {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModularDomain ModInt::domain_for(std::uint32_t modulus) {
  if (!is_prime(modulus)) throw InputError(std::to_string(modulus) + " is not prime");
  return {modulus};
}

ModInt::ModInt(std::int64_t value, Domain domain) : modulus_(domain.modulus) {
  if (modulus_ == 0) throw DomainError("residue without a modulus");
  std::int64_t r = value % static_cast<std::int64_t>(modulus_);
  if (r < 0) r += modulus_;
  value_ = static_cast<std::uint32_t>(r);
}

namespace {

void check_same(ModInt a, ModInt b) {
  if (a.modulus() != b.modulus())
    throw DomainError("residues modulo " + std::to_string(a.modulus()) + " and " +
                      std::to_string(b.modulus()) + " cannot be combined");
}

}  // namespace

ModInt operator+(ModInt a, ModInt b) {
  check_same(a, b);
  std::uint64_t s = std::uint64_t{a.value_} + b.value_;
  if (s >= a.modulus_) s -= a.modulus_;
  a.value_ = static_cast<std::uint32_t>(s);
  return a;
}

ModInt operator-(ModInt a, ModInt b) {
  check_same(a, b);
  a.value_ = a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + (a.modulus_ - b.value_);
  return a;
}

ModInt operator*(ModInt a, ModInt b) {
  check_same(a, b);
  a.value_ = static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % a.modulus_);
  return a;
}

ModInt ModInt::operator-() const {
  ModInt r = *this;
  if (value_ != 0) r.value_ = modulus_ - value_;
  return r;
}

bool operator==(ModInt a, ModInt b) { return a.modulus_ == b.modulus_ && a.value_ == b.value_; }

ModInt ModInt::pow(std::uint64_t exponent) const {
  ModInt result = one(domain());
  ModInt base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

ModInt ModInt::inverse() const {
  if (value_ == 0) throw InputError("zero residue has no inverse");
  return pow(modulus_ - 2);
}

}  // namespace jetforge
