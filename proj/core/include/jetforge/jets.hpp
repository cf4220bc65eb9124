#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetforge/polynomial.hpp"
#include "jetforge/text.hpp"

namespace jetforge {

/// Coordinate x_{i,j} of an m-jet: the coefficient of t^j in x_i(t).
/// `ambient` is 0-based; the printed name is 1-based, "x{i}_{j}".
struct JetVariable {
  std::size_t ambient = 0;
  std::size_t order = 0;

  std::string name() const;
  /// Position in the jet ring. Variables are grouped by order, so the
  /// variables of order <= k form a prefix.
  std::size_t index(std::size_t ambient_count) const { return order * ambient_count + ambient; }
};

std::vector<std::string> jet_variable_names(std::size_t ambient_count, std::size_t order);

/// Symbols of the jet ring: jet variables plus the user's parameters.
/// Throws InputError when a jet name collides with a declared name.
Symbols jet_symbols(const Symbols& user, std::size_t order);

/// Generators G_0..G_m of the ideal of m-jets of the hypersurface f = 0:
/// G_k is the coefficient of t^k in f(x_1(t), ..., x_n(t)) with
/// x_i(t) = sum_j x_{i,j} t^j. Parameters are carried by the coefficient ring.
template <Coefficient C>
struct JetIdeal {
  std::size_t ambient = 0;
  std::size_t order = 0;
  std::vector<Polynomial<C>> generators;
  Polynomial<C> source;

  friend bool operator==(const JetIdeal&, const JetIdeal&) = default;
};

template <Coefficient C>
JetIdeal<C> jet_ideal(const Polynomial<C>& f, std::size_t order);

/// Prefix G_0..G_low in the smaller jet ring of order `low`.
template <Coefficient C>
JetIdeal<C> truncate(const JetIdeal<C>& ideal, std::size_t low);

/// True when every monomial of g has weight `weight`, where x_{i,j} weighs j.
template <Coefficient C>
bool is_isobaric(const Polynomial<C>& g, std::size_t ambient_count, std::size_t weight);

/// One optional value per parameter; absent values must not be needed.
using ParameterAssignment = std::vector<std::optional<Rational>>;

/// Parses "name=value" items (value an integer or fraction) against the
/// declared parameters. Unlisted parameters stay unassigned.
ParameterAssignment parse_assignment(std::span<const std::string> items, const Symbols& symbols);

/// Substitutes parameter values into every generator (and the source).
JetIdeal<Rational> specialize(const JetIdeal<ParamPoly>& ideal, const ParameterAssignment& assignment);

JetIdeal<ModInt> reduce_mod(const JetIdeal<Rational>& ideal, std::uint32_t prime);

/// Jet generators of the monomial y_1^{a_1} ... y_n^{a_n}: the t-coefficients
/// of prod_i (sum_j y_{i,j} t^j)^{a_i}. No coefficient depends on the base.
template <Coefficient C>
JetIdeal<C> monomial_jet_generators(std::span<const std::uint32_t> exponents, std::size_t order,
                                    typename C::Domain coefficients = {});

/// Checks D_k(fg) = sum_{i+j=k} D_i(f) D_j(g) for every k <= m, where D_k(h)
/// is generator k of the jet ideal of h.
template <Coefficient C>
bool leibniz_check(const Polynomial<C>& f, const Polynomial<C>& g, std::size_t order);

/// A family F = f + sum_j s_j g_j.
class FamilyPolynomial {
 public:
  FamilyPolynomial(Polynomial<Rational> base, std::vector<Polynomial<Rational>> perturbations);

  /// Splits a parametric polynomial that is affine-linear in each parameter
  /// separately; throws InputError when F has another shape.
  static FamilyPolynomial decompose(const FamilyPoly& family);

  const Polynomial<Rational>& base() const { return base_; }
  const std::vector<Polynomial<Rational>>& perturbations() const { return perturbations_; }
  std::size_t parameter_count() const { return perturbations_.size(); }

  FamilyPoly combined() const;

 private:
  Polynomial<Rational> base_;
  std::vector<Polynomial<Rational>> perturbations_;
};

}  // namespace jetforge
