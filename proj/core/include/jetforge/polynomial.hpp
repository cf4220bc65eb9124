#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jetforge/modint.hpp"
#include "jetforge/rational.hpp"

namespace jetforge {

/// Exponents e = (e_1, ..., e_k) of a monomial x^e.
class ExponentVector {
 public:
  using value_type = std::uint32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t size) : entries_(size, 0) {}
  ExponentVector(std::initializer_list<value_type> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<value_type> entries) : entries_(std::move(entries)) {}

  static ExponentVector unit(std::size_t size, std::size_t index, value_type power = 1);

  std::size_t size() const { return entries_.size(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  value_type& operator[](std::size_t i) { return entries_[i]; }
  std::span<const value_type> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::uint64_t total_degree() const;
  bool is_zero() const;

  /// Componentwise sum: the exponent of the product of two monomials.
  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  /// Graded lexicographic order: total degree first, then lexicographic with
  /// the first variable most significant.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

 private:
  std::vector<value_type> entries_;
};

/// The closed set of coefficient rings: Rational, ModInt, and parameter
/// polynomials Polynomial<Rational>. Each value carries its Domain so that
/// mixed-domain arithmetic is detected at run time.
template <class C>
concept Coefficient = std::regular<typename C::Domain> &&
    requires(const C& a, const C& b, const typename C::Domain& d, long n) {
      { a + b } -> std::same_as<C>;
      { a - b } -> std::same_as<C>;
      { a * b } -> std::same_as<C>;
      { -a } -> std::same_as<C>;
      { a == b } -> std::convertible_to<bool>;
      { a.is_zero() } -> std::convertible_to<bool>;
      { a.domain() } -> std::convertible_to<typename C::Domain>;
      { C::zero(d) } -> std::same_as<C>;
      { C::one(d) } -> std::same_as<C>;
      { C::from_integer(n, d) } -> std::same_as<C>;
    };

template <Coefficient C>
struct PolynomialDomain {
  std::size_t variables = 0;
  typename C::Domain coefficients{};
  friend bool operator==(const PolynomialDomain&, const PolynomialDomain&) = default;
};

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in canonical form: no zero coefficient, no repeated
/// exponent, sorted by decreasing graded lexicographic order. Values are
/// immutable once built, so equality is term-by-term comparison.
template <Coefficient C>
class Polynomial {
 public:
  using CoefficientType = C;
  using Domain = PolynomialDomain<C>;
  using Term = std::pair<ExponentVector, C>;

  Polynomial() = default;
  explicit Polynomial(Domain domain) : domain_(domain) {}
  Polynomial(std::size_t variables, typename C::Domain coefficients)
      : domain_{variables, coefficients} {}

  /// Builds a canonical polynomial from arbitrary terms; duplicates are merged
  /// and zero coefficients dropped.
  static Polynomial from_terms(Domain domain, std::vector<Term> terms);
  static Polynomial constant(Domain domain, const C& value);
  static Polynomial monomial(Domain domain, ExponentVector exponent, const C& value);
  static Polynomial variable(Domain domain, std::size_t index);

  // Coefficient interface, so that Polynomial<Rational> can itself serve as
  // the coefficient ring of a family.
  static Polynomial zero(const Domain& d) { return Polynomial(d); }
  static Polynomial one(const Domain& d) { return constant(d, C::one(d.coefficients)); }
  static Polynomial from_integer(long n, const Domain& d) {
    return constant(d, C::from_integer(n, d.coefficients));
  }
  const Domain& domain() const { return domain_; }

  std::size_t variable_count() const { return domain_.variables; }
  const typename C::Domain& coefficient_domain() const { return domain_.coefficients; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint64_t total_degree() const;

  /// Coefficient of x^e (zero when absent).
  C coefficient(const ExponentVector& exponent) const;
  /// Value of the constant term.
  C constant_term() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.add(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.add(b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const C& factor) const;
  Polynomial pow(std::uint32_t exponent) const;

  /// Formal partial derivative with respect to variable `index` (0-based).
  Polynomial partial_derivative(std::size_t index) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.domain_ == b.domain_ && a.terms_ == b.terms_;
  }

 private:
  Polynomial add(const Polynomial& other, bool subtract) const;
  Polynomial multiply(const Polynomial& other) const;
  void require_compatible(const Polynomial& other, const char* op) const;

  Domain domain_{};
  std::vector<Term> terms_;
};

/// Sparse polynomial in the parameters s_1..s_l with rational coefficients.
using ParamPoly = Polynomial<Rational>;
/// Polynomial in the ambient variables whose coefficients depend on parameters.
using FamilyPoly = Polynomial<ParamPoly>;

// Domain helpers.
inline PolynomialDomain<Rational> rational_ring(std::size_t variables) { return {variables, {}}; }
inline PolynomialDomain<ModInt> modular_ring(std::size_t variables, std::uint32_t modulus) {
  return {variables, ModInt::domain_for(modulus)};
}
inline PolynomialDomain<ParamPoly> family_ring(std::size_t variables, std::size_t parameters) {
  return {variables, rational_ring(parameters)};
}

/// Value of f at a point of F_q^n.
ModInt evaluate(const Polynomial<ModInt>& f, std::span<const ModInt> point);
/// Value of f at a rational point.
Rational evaluate(const Polynomial<Rational>& f, std::span<const Rational> point);

/// Reduces rational coefficients modulo a prime; throws DomainError if some
/// denominator is divisible by the prime.
Polynomial<ModInt> reduce_mod(const Polynomial<Rational>& f, std::uint32_t prime);

/// Views a parameter-free polynomial as a family with `parameters` parameters.
FamilyPoly lift_to_family(const Polynomial<Rational>& f, std::size_t parameters);

/// Substitutes parameter values into every coefficient. Values must cover
/// every parameter that occurs; absent entries are reported as InputError.
Polynomial<Rational> specialize_parameters(const FamilyPoly& f,
                                           std::span<const std::optional<Rational>> values);

/// True when some coefficient depends on a parameter.
bool mentions_parameters(const FamilyPoly& f);

/// Drops the parameter dimension of a family whose coefficients are all
/// constant; throws InputError otherwise.
Polynomial<Rational> drop_parameters(const FamilyPoly& f);

}  // namespace jetforge
