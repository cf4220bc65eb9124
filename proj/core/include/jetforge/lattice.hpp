#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jetforge {

/// Integer point or direction in Z^d. Arithmetic helpers below throw
/// LimitError when an intermediate value leaves the int64 range.
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
IntVector add(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// gcd of the absolute values of the entries (0 for the zero vector).
std::int64_t content(std::span<const std::int64_t> v);
/// v divided by its content; the zero vector is returned unchanged.
IntVector primitive(std::span<const std::int64_t> v);
bool is_primitive(std::span<const std::int64_t> v);
bool is_nonnegative(std::span<const std::int64_t> v);

IntVector unit_vector(std::size_t dimension, std::size_t index);

/// Determinant of a square matrix by cofactor expansion (dimension <= 4 in
/// practice).
std::int64_t determinant(const IntMatrix& rows);

/// Rank over Q.
std::size_t rank(const IntMatrix& rows);

/// For d-1 vectors in Z^d, the vector of signed maximal minors: it is
/// orthogonal to every row and is zero iff the rows are dependent.
IntVector cofactor_normal(const IntMatrix& rows);

/// Primitive integer basis of {x in Q^columns : rows * x = 0}.
IntMatrix integer_nullspace(const IntMatrix& rows, std::size_t columns);

}  // namespace jetforge
