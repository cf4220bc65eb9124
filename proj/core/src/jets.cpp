#include "jetforge/jets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "jetforge/error.hpp"
#include "jetforge/series.hpp"

namespace jetforge {

std::string JetVariable::name() const {
  return "x" + std::to_string(ambient + 1) + "_" + std::to_string(order);
}

std::vector<std::string> jet_variable_names(std::size_t ambient_count, std::size_t order) {
  std::vector<std::string> names;
  names.reserve(ambient_count * (order + 1));
  for (std::size_t j = 0; j <= order; ++j)
    for (std::size_t i = 0; i < ambient_count; ++i) names.push_back(JetVariable{i, j}.name());
  return names;
}

Symbols jet_symbols(const Symbols& user, std::size_t order) {
  auto names = jet_variable_names(user.variables().size(), order);
  std::set<std::string> declared(user.variables().begin(), user.variables().end());
  declared.insert(user.parameters().begin(), user.parameters().end());
  for (const auto& n : names)
    if (declared.count(n) != 0)
      throw InputError("declared name '" + n + "' collides with a jet variable");
  return Symbols(std::move(names), user.parameters());
}

template <Coefficient C>
JetIdeal<C> jet_ideal(const Polynomial<C>& f, std::size_t order) {
  const std::size_t d = f.variable_count();
  if (d == 0) throw InputError("jet ideal of a polynomial without variables");
  const typename Polynomial<C>::Domain ring{d * (order + 1), f.coefficient_domain()};

  std::vector<TruncatedSeries<C>> arcs;
  arcs.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Polynomial<C>> coefficients;
    for (std::size_t j = 0; j <= order; ++j)
      coefficients.push_back(Polynomial<C>::variable(ring, JetVariable{i, j}.index(d)));
    arcs.emplace_back(std::move(coefficients));
  }
  auto image = substitute_series<C>(f, arcs, order);
  return JetIdeal<C>{d, order, image.coefficients(), f};
}

template <Coefficient C>
JetIdeal<C> truncate(const JetIdeal<C>& ideal, std::size_t low) {
  if (low > ideal.order)
    throw InputError("cannot truncate order " + std::to_string(ideal.order) + " jets to order " +
                     std::to_string(low));
  const std::size_t width = ideal.ambient * (low + 1);
  const typename Polynomial<C>::Domain ring{width, ideal.source.coefficient_domain()};
  JetIdeal<C> out{ideal.ambient, low, {}, ideal.source};
  for (std::size_t k = 0; k <= low; ++k) {
    std::vector<typename Polynomial<C>::Term> terms;
    for (const auto& [e, c] : ideal.generators[k].terms()) {
      for (std::size_t v = width; v < e.size(); ++v)
        if (e[v] != 0) throw std::logic_error("generator of weight " + std::to_string(k) +
                                              " involves a jet variable of higher order");
      terms.emplace_back(ExponentVector(std::vector<std::uint32_t>(e.begin(), e.begin() + static_cast<long>(width))), c);
    }
    out.generators.push_back(Polynomial<C>::from_terms(ring, std::move(terms)));
  }
  return out;
}

template <Coefficient C>
bool is_isobaric(const Polynomial<C>& g, std::size_t ambient_count, std::size_t weight) {
  return std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& term) {
    std::size_t w = 0;
    for (std::size_t v = 0; v < term.first.size(); ++v) w += term.first[v] * (v / ambient_count);
    return w == weight;
  });
}

ParameterAssignment parse_assignment(std::span<const std::string> items, const Symbols& symbols) {
  const auto& params = symbols.parameters();
  ParameterAssignment out(params.size());
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("assignment '" + item + "' is not of the form name=value");
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
    value.erase(std::remove_if(value.begin(), value.end(), ::isspace), value.end());
    auto it = std::find(params.begin(), params.end(), name);
    if (it == params.end()) throw InputError("'" + name + "' is not a declared parameter");
    auto& slot = out[static_cast<std::size_t>(it - params.begin())];
    if (slot) throw InputError("parameter '" + name + "' assigned twice");
    slot = Rational::from_string(value);
  }
  return out;
}

JetIdeal<Rational> specialize(const JetIdeal<ParamPoly>& ideal, const ParameterAssignment& assignment) {
  JetIdeal<Rational> out{ideal.ambient, ideal.order, {}, specialize_parameters(ideal.source, assignment)};
  out.generators.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) out.generators.push_back(specialize_parameters(g, assignment));
  return out;
}

JetIdeal<ModInt> reduce_mod(const JetIdeal<Rational>& ideal, std::uint32_t prime) {
  JetIdeal<ModInt> out{ideal.ambient, ideal.order, {}, reduce_mod(ideal.source, prime)};
  out.generators.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) out.generators.push_back(reduce_mod(g, prime));
  return out;
}

template <Coefficient C>
JetIdeal<C> monomial_jet_generators(std::span<const std::uint32_t> exponents, std::size_t order,
                                    typename C::Domain coefficients) {
  if (exponents.empty() || std::all_of(exponents.begin(), exponents.end(), [](auto a) { return a == 0; }))
    throw InputError("monomial exponent must have a positive entry");
  const typename Polynomial<C>::Domain ring{exponents.size(), coefficients};
  const auto y = Polynomial<C>::monomial(
      ring, ExponentVector(std::vector<std::uint32_t>(exponents.begin(), exponents.end())), C::one(coefficients));
  return jet_ideal(y, order);
}

template <Coefficient C>
bool leibniz_check(const Polynomial<C>& f, const Polynomial<C>& g, std::size_t order) {
  if (f.variable_count() != g.variable_count())
    throw InputError("Leibniz check needs polynomials in the same variables");
  const auto jf = jet_ideal(f, order);
  const auto jg = jet_ideal(g, order);
  const auto jfg = jet_ideal(f * g, order);
  for (std::size_t k = 0; k <= order; ++k) {
    Polynomial<C> convolution(jfg.generators[k].domain());
    for (std::size_t i = 0; i <= k; ++i) convolution += jf.generators[i] * jg.generators[k - i];
    if (!(convolution == jfg.generators[k])) return false;
  }
  return true;
}

FamilyPolynomial::FamilyPolynomial(Polynomial<Rational> base, std::vector<Polynomial<Rational>> perturbations)
    : base_(std::move(base)), perturbations_(std::move(perturbations)) {
  for (const auto& g : perturbations_)
    if (g.variable_count() != base_.variable_count())
      throw InputError("perturbation and base polynomial have different variable counts");
}

FamilyPolynomial FamilyPolynomial::decompose(const FamilyPoly& family) {
  const std::size_t d = family.variable_count();
  const std::size_t l = family.coefficient_domain().variables;
  std::vector<Polynomial<Rational>::Term> base_terms;
  std::vector<std::vector<Polynomial<Rational>::Term>> perturbation_terms(l);
  for (const auto& [e, c] : family.terms()) {
    for (const auto& [pe, pc] : c.terms()) {
      if (pe.is_zero()) {
        base_terms.emplace_back(e, pc);
        continue;
      }
      if (pe.total_degree() != 1)
        throw InputError("family is not of the form f + sum s_j g_j (nonlinear in the parameters)");
      const auto j = static_cast<std::size_t>(std::find(pe.begin(), pe.end(), 1U) - pe.begin());
      perturbation_terms[j].emplace_back(e, pc);
    }
  }
  std::vector<Polynomial<Rational>> perturbations;
  for (auto& terms : perturbation_terms)
    perturbations.push_back(Polynomial<Rational>::from_terms(rational_ring(d), std::move(terms)));
  return FamilyPolynomial(Polynomial<Rational>::from_terms(rational_ring(d), std::move(base_terms)),
                          std::move(perturbations));
}

FamilyPoly FamilyPolynomial::combined() const {
  const std::size_t l = perturbations_.size();
  FamilyPoly out = lift_to_family(base_, l);
  for (std::size_t j = 0; j < l; ++j) {
    const auto s = ParamPoly::variable(rational_ring(l), j);
    out += lift_to_family(perturbations_[j], l).scale(s);
  }
  return out;
}

template JetIdeal<Rational> jet_ideal(const Polynomial<Rational>&, std::size_t);
template JetIdeal<ModInt> jet_ideal(const Polynomial<ModInt>&, std::size_t);
template JetIdeal<ParamPoly> jet_ideal(const Polynomial<ParamPoly>&, std::size_t);
template JetIdeal<Rational> truncate(const JetIdeal<Rational>&, std::size_t);
template JetIdeal<ModInt> truncate(const JetIdeal<ModInt>&, std::size_t);
template JetIdeal<ParamPoly> truncate(const JetIdeal<ParamPoly>&, std::size_t);
template bool is_isobaric(const Polynomial<Rational>&, std::size_t, std::size_t);
template bool is_isobaric(const Polynomial<ModInt>&, std::size_t, std::size_t);
template bool is_isobaric(const Polynomial<ParamPoly>&, std::size_t, std::size_t);
template JetIdeal<Rational> monomial_jet_generators<Rational>(std::span<const std::uint32_t>, std::size_t,
                                                              RationalDomain);
template JetIdeal<ModInt> monomial_jet_generators<ModInt>(std::span<const std::uint32_t>, std::size_t,
                                                          ModularDomain);
template JetIdeal<ParamPoly> monomial_jet_generators<ParamPoly>(std::span<const std::uint32_t>, std::size_t,
                                                                PolynomialDomain<Rational>);
template bool leibniz_check(const Polynomial<Rational>&, const Polynomial<Rational>&, std::size_t);
template bool leibniz_check(const Polynomial<ModInt>&, const Polynomial<ModInt>&, std::size_t);
template bool leibniz_check(const Polynomial<ParamPoly>&, const Polynomial<ParamPoly>&, std::size_t);

}  // namespace jetforge
