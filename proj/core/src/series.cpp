#include "jetforge/series.hpp"

#include <string>

#include "jetforge/error.hpp"

namespace jetforge {

template <Coefficient C>
TruncatedSeries<C>::TruncatedSeries(typename Poly::Domain ring, std::size_t order)
    : coefficients_(order + 1, Poly(ring)) {}

template <Coefficient C>
TruncatedSeries<C>::TruncatedSeries(std::vector<Poly> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw InputError("a truncated series needs at least one coefficient");
  for (const auto& c : coefficients_)
    if (!(c.domain() == coefficients_.front().domain()))
      throw DomainError("series coefficients live in different rings");
}

template <Coefficient C>
TruncatedSeries<C> TruncatedSeries<C>::constant(const Poly& value, std::size_t order) {
  TruncatedSeries s(value.domain(), order);
  s.coefficients_[0] = value;
  return s;
}

template <Coefficient C>
TruncatedSeries<C> TruncatedSeries<C>::add(const TruncatedSeries& other) const {
  if (order() != other.order()) throw InputError("series orders differ");
  TruncatedSeries r = *this;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) r.coefficients_[k] += other.coefficients_[k];
  return r;
}

template <Coefficient C>
TruncatedSeries<C> TruncatedSeries<C>::multiply(const TruncatedSeries& other) const {
  if (order() != other.order()) throw InputError("series orders differ");
  TruncatedSeries r(ring(), order());
  for (std::size_t i = 0; i <= order(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order(); ++j) {
      if (other.coefficients_[j].is_zero()) continue;
      r.coefficients_[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return r;
}

template <Coefficient C>
TruncatedSeries<C> TruncatedSeries<C>::scale(const C& factor) const {
  TruncatedSeries r = *this;
  for (auto& c : r.coefficients_) c = c.scale(factor);
  return r;
}

template <Coefficient C>
TruncatedSeries<C> substitute_series(const Polynomial<C>& f, std::span<const TruncatedSeries<C>> series,
                                     std::size_t order) {
  if (series.size() != f.variable_count())
    throw InputError("substitution needs " + std::to_string(f.variable_count()) + " series, got " +
                     std::to_string(series.size()));
  if (series.empty()) throw InputError("substitution into a polynomial without variables");
  for (const auto& s : series)
    if (s.order() != order) throw InputError("series of order " + std::to_string(s.order()) +
                                             " where order " + std::to_string(order) + " was requested");
  const auto& ring = series.front().ring();
  for (const auto& s : series)
    if (!(s.ring() == ring)) throw DomainError("series live in different rings");
  if (!(ring.coefficients == f.coefficient_domain()))
    throw DomainError("series ring and polynomial have different coefficient domains");

  // powers[i][k] = x_i(t)^k, grown on demand.
  std::vector<std::vector<TruncatedSeries<C>>> powers(series.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const TruncatedSeries<C>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(TruncatedSeries<C>::constant(Polynomial<C>::one(ring), order));
    while (cache.size() <= k) cache.push_back(cache.back() * series[i]);
    return cache[k];
  };

  TruncatedSeries<C> result(ring, order);
  for (const auto& [e, c] : f.terms()) {
    TruncatedSeries<C> term = TruncatedSeries<C>::constant(Polynomial<C>::constant(ring, c), order);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term = term * power(i, e[i]);
    result = result + term;
  }
  return result;
}

template class TruncatedSeries<Rational>;
template class TruncatedSeries<ModInt>;
template class TruncatedSeries<ParamPoly>;

template TruncatedSeries<Rational> substitute_series(const Polynomial<Rational>&,
                                                     std::span<const TruncatedSeries<Rational>>, std::size_t);
template TruncatedSeries<ModInt> substitute_series(const Polynomial<ModInt>&,
                                                   std::span<const TruncatedSeries<ModInt>>, std::size_t);
template TruncatedSeries<ParamPoly> substitute_series(const Polynomial<ParamPoly>&,
                                                      std::span<const TruncatedSeries<ParamPoly>>, std::size_t);

}  // namespace jetforge
