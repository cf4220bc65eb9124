#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jetforge/polynomial.hpp"

namespace jetforge {

/// Element of R[t]/(t^{m+1}) where R is a polynomial ring: the coefficient
/// of t^k is stored at index k. Products discard every term of t-degree > m.
template <Coefficient C>
class TruncatedSeries {
 public:
  using Poly = Polynomial<C>;

  /// The zero series of order m.
  TruncatedSeries(typename Poly::Domain ring, std::size_t order);
  /// Requires at least one coefficient; the order is coefficients.size() - 1.
  explicit TruncatedSeries(std::vector<Poly> coefficients);

  static TruncatedSeries constant(const Poly& value, std::size_t order);

  std::size_t order() const { return coefficients_.size() - 1; }
  const typename Poly::Domain& ring() const { return coefficients_.front().domain(); }
  const Poly& operator[](std::size_t k) const { return coefficients_[k]; }
  const std::vector<Poly>& coefficients() const { return coefficients_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return a.add(b); }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return a.multiply(b); }
  TruncatedSeries scale(const C& factor) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  TruncatedSeries add(const TruncatedSeries& other) const;
  TruncatedSeries multiply(const TruncatedSeries& other) const;

  std::vector<Poly> coefficients_;
};

/// f(x_1(t), ..., x_n(t)) mod t^{m+1}. Coefficient k of the result is the
/// image D_k(f) under the Hasse-Schmidt derivation determined by the series.
/// Throws InputError when the number of series differs from f's variable
/// count or when a series has order other than m.
template <Coefficient C>
TruncatedSeries<C> substitute_series(const Polynomial<C>& f, std::span<const TruncatedSeries<C>> series,
                                     std::size_t order);

}  // namespace jetforge
