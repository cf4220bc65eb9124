#include "jetforge/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "jetforge/error.hpp"
#include "jetforge/rational.hpp"

namespace jetforge {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw LimitError("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw LimitError("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in dot product");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntVector add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in vector sum");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

std::int64_t content(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

IntVector primitive(std::span<const std::int64_t> v) {
  IntVector r(v.begin(), v.end());
  const auto g = content(v);
  if (g > 1)
    for (auto& x : r) x /= g;
  return r;
}

bool is_primitive(std::span<const std::int64_t> v) { return content(v) == 1; }

bool is_nonnegative(std::span<const std::int64_t> v) {
  for (auto x : v)
    if (x < 0) return false;
  return true;
}

IntVector unit_vector(std::size_t dimension, std::size_t index) {
  IntVector e(dimension, 0);
  e.at(index) = 1;
  return e;
}

namespace {

IntMatrix minor_matrix(const IntMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  IntMatrix out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == skip_row) continue;
    IntVector row;
    for (std::size_t c = 0; c < m[r].size(); ++c)
      if (c != skip_col) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::int64_t determinant(const IntMatrix& rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw InputError("determinant of a non-square matrix");
  if (n == 0) return 1;
  if (n == 1) return rows[0][0];
  if (n == 2) return checked_add(checked_mul(rows[0][0], rows[1][1]), -checked_mul(rows[0][1], rows[1][0]));
  std::int64_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (rows[0][c] == 0) continue;
    auto term = checked_mul(rows[0][c], determinant(minor_matrix(rows, 0, c)));
    det = checked_add(det, c % 2 == 0 ? term : -term);
  }
  return det;
}

std::size_t rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> q;
    for (auto x : r) q.emplace_back(static_cast<long>(x));
    m.push_back(std::move(q));
  }
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      const Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

IntVector cofactor_normal(const IntMatrix& rows) {
  const std::size_t d = rows.size() + 1;
  for (const auto& r : rows)
    if (r.size() != d) throw InputError("cofactor normal needs d-1 vectors in dimension d");
  IntVector normal(d);
  for (std::size_t c = 0; c < d; ++c) {
    IntMatrix sub;
    for (const auto& r : rows) {
      IntVector row;
      for (std::size_t k = 0; k < d; ++k)
        if (k != c) row.push_back(r[k]);
      sub.push_back(std::move(row));
    }
    const auto minor = determinant(sub);
    normal[c] = c % 2 == 0 ? minor : -minor;
  }
  return normal;
}

IntMatrix integer_nullspace(const IntMatrix& rows, std::size_t columns) {
  // Reduced row echelon form over Q, then one basis vector per free column.
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    if (r.size() != columns) throw InputError("nullspace of a ragged matrix");
    std::vector<Rational> q;
    for (auto x : r) q.emplace_back(static_cast<long>(x));
    m.push_back(std::move(q));
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < columns && row < m.size(); ++c) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[row]);
    const Rational lead = m[row][c];
    for (auto& x : m[row]) x = x / lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const Rational factor = m[r][c];
      for (std::size_t k = 0; k < columns; ++k) m[r][k] -= factor * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  IntMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(columns);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    mpz_class lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
    IntVector out;
    for (const auto& x : v) {
      const mpz_class scaled(x.value() * lcm);
      if (!scaled.fits_slong_p()) throw LimitError("integer overflow in lattice arithmetic");
      out.push_back(scaled.get_si());
    }
    basis.push_back(primitive(out));
  }
  return basis;
}

}  // namespace jetforge
