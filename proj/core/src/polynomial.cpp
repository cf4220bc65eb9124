#include "jetforge/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "jetforge/error.hpp"

namespace jetforge {

ExponentVector ExponentVector::unit(std::size_t size, std::size_t index, value_type power) {
  ExponentVector e(size);
  e.entries_.at(index) = power;
  return e;
}

std::uint64_t ExponentVector::total_degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](value_type v) { return v == 0; });
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw DomainError("exponent vectors of different lengths");
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return a.entries_ <=> b.entries_;
}

namespace {

template <class C>
struct Descending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return b < a; }
};

}  // namespace

template <Coefficient C>
Polynomial<C> Polynomial<C>::from_terms(Domain domain, std::vector<Term> terms) {
  Polynomial p(domain);
  for (const auto& [e, c] : terms) {
    if (e.size() != domain.variables)
      throw DomainError("exponent of length " + std::to_string(e.size()) + " in a ring with " +
                        std::to_string(domain.variables) + " variables");
    if (!(c.domain() == domain.coefficients)) throw DomainError("coefficient outside the ring's domain");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return b.first < a.first; });
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == term.first) {
      p.terms_.back().second = p.terms_.back().second + term.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::constant(Domain domain, const C& value) {
  return monomial(domain, ExponentVector(domain.variables), value);
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::monomial(Domain domain, ExponentVector exponent, const C& value) {
  std::vector<Term> terms;
  terms.emplace_back(std::move(exponent), value);
  return from_terms(domain, std::move(terms));
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::variable(Domain domain, std::size_t index) {
  if (index >= domain.variables)
    throw InputError("variable index " + std::to_string(index) + " out of range");
  return monomial(domain, ExponentVector::unit(domain.variables, index),
                  C::one(domain.coefficients));
}

template <Coefficient C>
bool Polynomial<C>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_zero());
}

template <Coefficient C>
std::uint64_t Polynomial<C>::total_degree() const {
  // Leading term has the largest total degree under grlex.
  return terms_.empty() ? 0 : terms_.front().first.total_degree();
}

template <Coefficient C>
C Polynomial<C>::coefficient(const ExponentVector& exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, const ExponentVector& e) { return e < t.first; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return C::zero(domain_.coefficients);
}

template <Coefficient C>
C Polynomial<C>::constant_term() const {
  return coefficient(ExponentVector(domain_.variables));
}

template <Coefficient C>
void Polynomial<C>::require_compatible(const Polynomial& other, const char* op) const {
  if (domain_.variables != other.domain_.variables)
    throw DomainError(std::string("cannot ") + op + " polynomials in " +
                      std::to_string(domain_.variables) + " and " +
                      std::to_string(other.domain_.variables) + " variables");
  if (!(domain_.coefficients == other.domain_.coefficients))
    throw DomainError(std::string("cannot ") + op + " polynomials over different coefficient domains");
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::add(const Polynomial& other, bool subtract) const {
  require_compatible(other, subtract ? "subtract" : "add");
  Polynomial r(domain_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && b->first < a->first)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || a->first < b->first) {
      r.terms_.emplace_back(b->first, subtract ? -b->second : b->second);
      ++b;
    } else {
      C c = subtract ? a->second - b->second : a->second + b->second;
      if (!c.is_zero()) r.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return r;
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::multiply(const Polynomial& other) const {
  require_compatible(other, "multiply");
  std::map<ExponentVector, C, Descending<C>> acc;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      ExponentVector e = ea + eb;
      C c = ca * cb;
      auto [it, inserted] = acc.try_emplace(std::move(e), c);
      if (!inserted) it->second = it->second + c;
    }
  }
  Polynomial r(domain_);
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
  return r;
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::operator-() const {
  Polynomial r(domain_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
  return r;
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::scale(const C& factor) const {
  if (!(factor.domain() == domain_.coefficients))
    throw DomainError("scaling factor outside the ring's coefficient domain");
  Polynomial r(domain_);
  if (factor.is_zero()) return r;
  for (const auto& [e, c] : terms_) {
    C v = c * factor;
    if (!v.is_zero()) r.terms_.emplace_back(e, std::move(v));
  }
  return r;
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::pow(std::uint32_t exponent) const {
  Polynomial result = one(domain_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::partial_derivative(std::size_t index) const {
  if (index >= domain_.variables)
    throw InputError("variable index " + std::to_string(index) + " out of range for a ring with " +
                     std::to_string(domain_.variables) + " variables");
  std::vector<Term> out;
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    ExponentVector d = e;
    d[index] -= 1;
    out.emplace_back(std::move(d), c * C::from_integer(static_cast<long>(e[index]), domain_.coefficients));
  }
  return from_terms(domain_, std::move(out));
}

template class Polynomial<Rational>;
template class Polynomial<ModInt>;
template class Polynomial<ParamPoly>;

ModInt evaluate(const Polynomial<ModInt>& f, std::span<const ModInt> point) {
  if (point.size() != f.variable_count())
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(f.variable_count()));
  ModInt sum = ModInt::zero(f.coefficient_domain());
  for (const auto& [e, c] : f.terms()) {
    ModInt term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= point[i].pow(e[i]);
    sum += term;
  }
  return sum;
}

Rational evaluate(const Polynomial<Rational>& f, std::span<const Rational> point) {
  if (point.size() != f.variable_count())
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(f.variable_count()));
  Rational sum;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

Polynomial<ModInt> reduce_mod(const Polynomial<Rational>& f, std::uint32_t prime) {
  const auto domain = modular_ring(f.variable_count(), prime);
  std::vector<Polynomial<ModInt>::Term> terms;
  terms.reserve(f.size());
  for (const auto& [e, c] : f.terms()) terms.emplace_back(e, ModInt(c.residue(prime), domain.coefficients));
  return Polynomial<ModInt>::from_terms(domain, std::move(terms));
}

FamilyPoly lift_to_family(const Polynomial<Rational>& f, std::size_t parameters) {
  const auto domain = family_ring(f.variable_count(), parameters);
  std::vector<FamilyPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [e, c] : f.terms()) terms.emplace_back(e, ParamPoly::constant(domain.coefficients, c));
  return FamilyPoly::from_terms(domain, std::move(terms));
}

Polynomial<Rational> specialize_parameters(const FamilyPoly& f,
                                           std::span<const std::optional<Rational>> values) {
  const std::size_t nparams = f.coefficient_domain().variables;
  if (values.size() != nparams)
    throw InputError("assignment lists " + std::to_string(values.size()) + " parameters, expected " +
                     std::to_string(nparams));
  std::vector<Rational> point(nparams);
  std::vector<bool> known(nparams, false);
  for (std::size_t j = 0; j < nparams; ++j) {
    if (values[j]) {
      point[j] = *values[j];
      known[j] = true;
    }
  }
  std::vector<Polynomial<Rational>::Term> terms;
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [pe, pc] : c.terms())
      for (std::size_t j = 0; j < nparams; ++j)
        if (pe[j] != 0 && !known[j])
          throw InputError("assignment is missing parameter " + std::to_string(j + 1));
    terms.emplace_back(e, evaluate(c, point));
  }
  return Polynomial<Rational>::from_terms(rational_ring(f.variable_count()), std::move(terms));
}

bool mentions_parameters(const FamilyPoly& f) {
  return std::any_of(f.terms().begin(), f.terms().end(),
                     [](const FamilyPoly::Term& t) { return !t.second.is_constant(); });
}

Polynomial<Rational> drop_parameters(const FamilyPoly& f) {
  if (mentions_parameters(f)) throw InputError("polynomial depends on parameters");
  std::vector<Polynomial<Rational>::Term> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_back(e, c.constant_term());
  return Polynomial<Rational>::from_terms(rational_ring(f.variable_count()), std::move(terms));
}

}  // namespace jetforge
