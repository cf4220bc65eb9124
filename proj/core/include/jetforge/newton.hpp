#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetforge/lattice.hpp"
#include "jetforge/polynomial.hpp"

namespace jetforge {

/// Largest ambient dimension handled by the polyhedral code.
inline constexpr std::size_t max_polyhedral_dimension = 4;

/// Exponents with nonzero coefficient, in the polynomial's term order.
/// Throws InputError for the zero polynomial.
std::vector<IntVector> exponent_support(const Polynomial<Rational>& f);

/// Inequality <normal, x> >= offset with a primitive nonnegative normal.
struct Facet {
  IntVector normal;
  std::int64_t offset = 0;
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// A face of P given by its vertex set. `direction` is a supporting
/// direction in the relative interior of the face's normal cone: the sum of
/// the normals of all facets containing the face.
struct Face {
  IntVector direction;
  std::vector<IntVector> vertices;
  bool compact = false;
};

/// P = conv(points) + R^d_{>=0}, stored as vertices (sorted
/// lexicographically) and facets (sorted by normal).
class NewtonPolyhedron {
 public:
  /// Throws InputError for an empty or ragged point set, LimitError when the
  /// dimension exceeds max_polyhedral_dimension or coordinates overflow.
  static NewtonPolyhedron from_points(std::vector<IntVector> points);

  std::size_t dimension() const { return dimension_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  /// h(p) = min over P of <p, x>; p must be nonnegative.
  std::int64_t support(std::span<const std::int64_t> p) const;
  /// Vertices attaining h(p).
  std::vector<IntVector> attaining_vertices(std::span<const std::int64_t> p) const;
  bool contains(std::span<const std::int64_t> e) const;
  /// Indices of the facets whose hyperplane passes through x.
  std::vector<std::size_t> tight_facets(std::span<const std::int64_t> x) const;

  /// Every nonempty face, vertex sets sorted; compact faces first is not
  /// guaranteed, the order is by vertex count then lexicographic.
  std::vector<Face> faces() const;
  std::vector<Face> compact_faces() const;

 private:
  std::size_t dimension_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
};

NewtonPolyhedron newton_polyhedron(const Polynomial<Rational>& f);

/// Terms of f whose exponent attains h_f(p); p nonnegative and nonzero.
Polynomial<Rational> face_polynomial(const Polynomial<Rational>& f, std::span<const std::int64_t> p);

struct GammaViolation {
  std::size_t perturbation = 0;  // index into the perturbation list
  IntVector exponent;
};

struct GammaReport {
  bool valid = true;
  std::vector<GammaViolation> violations;
};

/// Checks P(g_j) within P(f) for every perturbation, listing each exponent of
/// some g_j outside P(f).
GammaReport gamma_deformation_valid(const Polynomial<Rational>& f,
                                    std::span<const Polynomial<Rational>> perturbations);

enum class Verdict { nondegenerate, degenerate, inconclusive };
std::string to_string(Verdict v);

/// A torus point where a face polynomial and all its partials vanish.
/// `modulus` is 0 for a point over Q, otherwise the prime q of F_q.
struct DegeneracyWitness {
  IntVector face_direction;
  std::uint32_t modulus = 0;
  std::vector<std::string> point;
  /// For the exact 2D path: the repeated factor gcd(p, p') of the
  /// dehomogenized face polynomial, in the variable z.
  std::string repeated_factor;
};

struct NondegeneracyResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<DegeneracyWitness> witness;
  std::vector<std::string> notes;
};

struct NondegeneracyOptions {
  enum class Mode { exact2d, sample };
  Mode mode = Mode::exact2d;
  std::vector<std::uint32_t> primes;
  /// Maximum (q-1)^d torus points searched per face and prime.
  std::optional<std::uint64_t> torus_bound;
  unsigned workers = 1;
};

/// Decides whether every compact face polynomial f_g is nonsingular in the
/// torus, meaning no torus point satisfies f_g = 0 together with all
/// partial derivatives of f_g. In two variables this is exact; otherwise the
/// torus of each F_q is searched and the answer is degenerate (with the first
/// witness found) or inconclusive. A witness over F_q certifies that the
/// reduction mod q is degenerate.
NondegeneracyResult nondegenerate(const Polynomial<Rational>& f, const NondegeneracyOptions& options);

/// sum_i e_i / a_i >= 1, the membership test for the integral closure of
/// (x_1^{a_1}, ..., x_n^{a_n}); every a_i must be positive.
bool integral_closure_member(std::span<const std::int64_t> e, std::span<const std::int64_t> a);
/// True when every term of f passes the monomial test.
bool integral_closure_member(const Polynomial<Rational>& f, std::span<const std::int64_t> a);

}  // namespace jetforge
