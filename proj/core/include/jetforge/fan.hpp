#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetforge/lattice.hpp"
#include "jetforge/newton.hpp"

namespace jetforge {

/// Largest ambient dimension for which resolve() is implemented.
inline constexpr std::size_t max_resolution_dimension = 3;

/// Strongly convex rational cone in the closed positive orthant, generated by
/// primitive rays kept in lexicographic order. The cone {0} has no rays.
class Cone {
 public:
  /// Throws InputError for rays that are zero, negative, not primitive, or of
  /// mixed dimension. Duplicate rays are merged.
  Cone(std::size_t ambient_dimension, std::vector<IntVector> rays);

  std::size_t ambient_dimension() const { return ambient_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  /// Dimension of the linear span.
  std::size_t dimension() const { return dimension_; }
  bool is_simplicial() const { return rays_.size() == dimension_; }

  bool contains(std::span<const std::int64_t> x) const;
  bool contains_in_relative_interior(std::span<const std::int64_t> x) const;

  /// Facets as ray subsets (each a Cone of dimension one less).
  std::vector<Cone> facets() const;
  /// All faces including {0} and the cone itself.
  std::vector<Cone> faces() const;

  /// |det| for a full-dimensional simplicial cone; gcd of maximal minors in
  /// general. Throws InputError for a non-simplicial cone.
  std::int64_t multiplicity() const;

  friend bool operator==(const Cone& a, const Cone& b) { return a.rays_ == b.rays_ && a.ambient_ == b.ambient_; }
  friend bool operator<(const Cone& a, const Cone& b) { return a.rays_ < b.rays_; }

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> rays_;
  std::size_t dimension_ = 0;
  IntMatrix equations_;     // <w, x> = 0 on the span
  IntMatrix inequalities_;  // <n, x> >= 0, one per facet
};

/// Regular means simplicial with generators extending to a lattice basis.
/// Non-simplicial cones are never regular.
bool is_regular(const Cone& cone);

/// A fan given by its maximal cones; all faces are implied.
class Fan {
 public:
  Fan(std::size_t dimension, std::vector<Cone> maximal_cones);
  /// The standard cone and its faces.
  static Fan standard(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  /// Rays of all cones, sorted lexicographically.
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  /// Ray indices of each maximal cone.
  std::vector<std::vector<std::size_t>> maximal_cone_indices() const;
  /// Every cone of the fan, {0} included, without repetition.
  std::vector<Cone> cones() const;
  bool has_cone(const Cone& cone) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dimension_ == b.dimension_ && a.maximal_ == b.maximal_;
  }

 private:
  std::size_t dimension_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> maximal_;
};

bool is_regular(const Fan& fan);

/// Maximal cones are the normal cones of the vertices of P.
Fan newton_fan(const NewtonPolyhedron& P);

/// Checks that every lattice point of [0, box]^d lies in the relative
/// interior of exactly one cone of the fan; returns the first offending
/// point, or nothing when the fan passes.
std::optional<IntVector> well_formedness_violation(const Fan& fan, std::int64_t box);

/// Index sets J (0-based, ascending) such that h_P vanishes on the coordinate
/// cone spanned by {e_i : i in J}: some vertex has v_i = 0 for every i in J.
std::vector<std::vector<std::size_t>> vanishing_coordinate_faces(const NewtonPolyhedron& P);

/// Renders a 0-based index set 1-based, as "{1,2}".
std::string index_set_to_string(std::span<const std::size_t> J);

struct AdmissibilityReport {
  bool admissible = true;
  /// Index sets whose coordinate cone is missing from the fan.
  std::vector<std::vector<std::size_t>> violations;
};

/// Property (*): the coordinate cone of every vanishing index set is a cone
/// of the fan. Throws InputError when the fan does not subdivide the
/// positive orthant of P's dimension.
AdmissibilityReport is_admissible(const Fan& fan, const NewtonPolyhedron& P);

/// Replaces every cone containing r by the joins of r with its faces not
/// containing r. A ray already present leaves the fan unchanged.
Fan stellar_subdivide(const Fan& fan, std::span<const std::int64_t> r);

/// Refines the fan until every cone is regular, keeping the coordinate cones
/// required by property (*). Two dimensions use the continued-fraction
/// rays of each cone; three dimensions subdivide the first non-regular cone
/// (non-simplicial: at the sum of its rays; simplicial: at the parallelepiped
/// point minimizing the largest resulting multiplicity, ties broken
/// lexicographically). Throws LimitError above dimension 3 or after
/// `max_steps` subdivisions.
Fan resolve(const Fan& fan, const NewtonPolyhedron& P, std::size_t max_steps = 10000);

}  // namespace jetforge
