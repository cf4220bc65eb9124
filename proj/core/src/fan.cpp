#include "jetforge/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "jetforge/error.hpp"

namespace jetforge {

namespace {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::int64_t det2(const IntVector& u, const IntVector& v) {
  return checked_add(checked_mul(u[0], v[1]), -checked_mul(u[1], v[0]));
}

}  // namespace

Cone::Cone(std::size_t ambient_dimension, std::vector<IntVector> rays) : ambient_(ambient_dimension) {
  for (const auto& r : rays) {
    if (r.size() != ambient_) throw InputError("ray dimension differs from the ambient dimension");
    if (!is_nonnegative(r)) throw InputError("rays must lie in the positive orthant");
    if (!is_primitive(r)) throw InputError("rays must be primitive nonzero integer vectors");
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  rays_ = std::move(rays);
  dimension_ = rank(rays_);
  equations_ = integer_nullspace(rays_, ambient_);

  if (dimension_ == 0) return;
  std::set<IntVector> normals;
  for_each_subset(rays_.size(), dimension_ - 1, [&](const std::vector<std::size_t>& chosen) {
    IntMatrix rows;
    for (auto i : chosen) rows.push_back(rays_[i]);
    rows.insert(rows.end(), equations_.begin(), equations_.end());
    auto n = primitive(cofactor_normal(rows));
    if (content(n) == 0) return;
    bool positive = false;
    bool negative = false;
    for (const auto& r : rays_) {
      const auto s = dot(n, r);
      positive |= s > 0;
      negative |= s < 0;
    }
    if (positive && negative) return;
    if (negative)
      for (auto& x : n) x = -x;
    normals.insert(std::move(n));
  });
  inequalities_.assign(normals.begin(), normals.end());
}

bool Cone::contains(std::span<const std::int64_t> x) const {
  if (x.size() != ambient_) throw InputError("point dimension differs from the cone's");
  for (const auto& w : equations_)
    if (dot(w, x) != 0) return false;
  for (const auto& n : inequalities_)
    if (dot(n, x) < 0) return false;
  return true;
}

bool Cone::contains_in_relative_interior(std::span<const std::int64_t> x) const {
  if (x.size() != ambient_) throw InputError("point dimension differs from the cone's");
  for (const auto& w : equations_)
    if (dot(w, x) != 0) return false;
  for (const auto& n : inequalities_)
    if (dot(n, x) <= 0) return false;
  return true;
}

std::vector<Cone> Cone::facets() const {
  std::vector<Cone> out;
  for (const auto& n : inequalities_) {
    std::vector<IntVector> on;
    for (const auto& r : rays_)
      if (dot(n, r) == 0) on.push_back(r);
    out.emplace_back(ambient_, std::move(on));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cone> Cone::faces() const {
  std::set<Cone> found{*this};
  std::vector<Cone> work{*this};
  while (!work.empty()) {
    const Cone c = work.back();
    work.pop_back();
    for (auto& f : c.facets())
      if (found.insert(f).second) work.push_back(f);
  }
  return {found.begin(), found.end()};
}

std::int64_t Cone::multiplicity() const {
  if (!is_simplicial()) throw InputError("multiplicity of a non-simplicial cone");
  const std::size_t k = rays_.size();
  std::int64_t g = 0;
  for_each_subset(ambient_, k, [&](const std::vector<std::size_t>& columns) {
    IntMatrix m;
    for (const auto& r : rays_) {
      IntVector row;
      for (auto c : columns) row.push_back(r[c]);
      m.push_back(std::move(row));
    }
    g = std::gcd(g, determinant(m));
  });
  return g;
}

bool is_regular(const Cone& cone) { return cone.is_simplicial() && cone.multiplicity() == 1; }

Fan::Fan(std::size_t dimension, std::vector<Cone> maximal_cones) : dimension_(dimension) {
  if (dimension == 0) throw InputError("fan of dimension 0");
  std::set<IntVector> rays;
  for (const auto& c : maximal_cones) {
    if (c.ambient_dimension() != dimension) throw InputError("cone dimension differs from the fan's");
    rays.insert(c.rays().begin(), c.rays().end());
  }
  std::sort(maximal_cones.begin(), maximal_cones.end());
  maximal_cones.erase(std::unique(maximal_cones.begin(), maximal_cones.end()), maximal_cones.end());
  maximal_ = std::move(maximal_cones);
  rays_.assign(rays.begin(), rays.end());
}

Fan Fan::standard(std::size_t dimension) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < dimension; ++i) rays.push_back(unit_vector(dimension, i));
  return Fan(dimension, {Cone(dimension, std::move(rays))});
}

std::vector<std::vector<std::size_t>> Fan::maximal_cone_indices() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : maximal_) {
    std::vector<std::size_t> idx;
    for (const auto& r : c.rays())
      idx.push_back(static_cast<std::size_t>(std::lower_bound(rays_.begin(), rays_.end(), r) - rays_.begin()));
    out.push_back(std::move(idx));
  }
  return out;
}

std::vector<Cone> Fan::cones() const {
  std::set<Cone> all;
  for (const auto& c : maximal_)
    for (auto& f : c.faces()) all.insert(std::move(f));
  return {all.begin(), all.end()};
}

bool Fan::has_cone(const Cone& cone) const {
  const auto all = cones();
  return std::find(all.begin(), all.end(), cone) != all.end();
}

bool is_regular(const Fan& fan) {
  return std::all_of(fan.maximal_cones().begin(), fan.maximal_cones().end(),
                     [](const Cone& c) { return is_regular(c); });
}

Fan newton_fan(const NewtonPolyhedron& P) {
  std::vector<Cone> cones;
  for (const auto& v : P.vertices()) {
    std::vector<IntVector> normals;
    for (auto i : P.tight_facets(v)) normals.push_back(P.facets()[i].normal);
    cones.emplace_back(P.dimension(), std::move(normals));
  }
  return Fan(P.dimension(), std::move(cones));
}

std::optional<IntVector> well_formedness_violation(const Fan& fan, std::int64_t box) {
  const auto cones = fan.cones();
  const std::size_t d = fan.dimension();
  IntVector x(d, 0);
  while (true) {
    const auto hits = std::count_if(cones.begin(), cones.end(),
                                    [&](const Cone& c) { return c.contains_in_relative_interior(x); });
    if (hits != 1) return x;
    std::size_t i = 0;
    while (i < d && x[i] == box) x[i++] = 0;
    if (i == d) return std::nullopt;
    ++x[i];
  }
}

std::vector<std::vector<std::size_t>> vanishing_coordinate_faces(const NewtonPolyhedron& P) {
  const std::size_t d = P.dimension();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 1; size <= d; ++size) {
    for_each_subset(d, size, [&](const std::vector<std::size_t>& J) {
      const bool vanishes = std::any_of(P.vertices().begin(), P.vertices().end(), [&](const IntVector& v) {
        return std::all_of(J.begin(), J.end(), [&](std::size_t i) { return v[i] == 0; });
      });
      if (vanishes) out.push_back(J);
    });
  }
  return out;
}

std::string index_set_to_string(std::span<const std::size_t> J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i] + 1);
  return s + "}";
}

namespace {

Cone coordinate_cone(std::size_t d, const std::vector<std::size_t>& J) {
  std::vector<IntVector> rays;
  for (auto i : J) rays.push_back(unit_vector(d, i));
  return Cone(d, std::move(rays));
}

}  // namespace

AdmissibilityReport is_admissible(const Fan& fan, const NewtonPolyhedron& P) {
  if (fan.dimension() != P.dimension()) throw InputError("fan and polyhedron have different dimensions");
  if (auto bad = well_formedness_violation(fan, 3)) throw InputError("fan does not subdivide the positive orthant");
  const auto all = fan.cones();
  AdmissibilityReport report;
  for (const auto& J : vanishing_coordinate_faces(P))
    if (std::find(all.begin(), all.end(), coordinate_cone(P.dimension(), J)) == all.end())
      report.violations.push_back(J);
  report.admissible = report.violations.empty();
  return report;
}

Fan stellar_subdivide(const Fan& fan, std::span<const std::int64_t> r) {
  if (r.size() != fan.dimension()) throw InputError("ray dimension differs from the fan's");
  if (!is_nonnegative(r)) throw InputError("stellar ray has a negative entry");
  if (!is_primitive(r)) throw InputError("stellar ray is not primitive");
  const IntVector ray(r.begin(), r.end());
  if (std::binary_search(fan.rays().begin(), fan.rays().end(), ray)) return fan;

  std::vector<Cone> out;
  bool inside = false;
  for (const auto& c : fan.maximal_cones()) {
    if (!c.contains(ray)) {
      out.push_back(c);
      continue;
    }
    inside = true;
    for (const auto& facet : c.facets()) {
      if (facet.contains(ray)) continue;
      auto rays = facet.rays();
      rays.push_back(ray);
      out.emplace_back(fan.dimension(), std::move(rays));
    }
  }
  if (!inside) throw InputError("stellar ray lies outside the support of the fan");
  return Fan(fan.dimension(), std::move(out));
}

namespace {

Fan resolve_two(Fan fan, std::size_t max_steps) {
  std::size_t steps = 0;
  const auto original = fan.maximal_cones();
  for (const auto& cone : original) {
    if (is_regular(cone)) continue;
    IntVector u = cone.rays()[0];
    IntVector v = cone.rays()[1];
    if (det2(u, v) < 0) std::swap(u, v);
    std::int64_t n = det2(u, v);
    // Continued-fraction step: the ray next to u is w = (v + c u) / n with
    // 0 < c < n, giving det(u, w) = 1 and det(w, v) = c.
    while (n > 1) {
      if (++steps > max_steps) throw LimitError("resolution exceeded its step budget");
      std::int64_t c = 1;
      while ((v[0] + c * u[0]) % n != 0 || (v[1] + c * u[1]) % n != 0) ++c;
      const IntVector w{(v[0] + c * u[0]) / n, (v[1] + c * u[1]) / n};
      fan = stellar_subdivide(fan, w);
      u = w;
      n = c;
    }
  }
  return fan;
}

IntVector parallelepiped_center(const Cone& cone) {
  const auto& r = cone.rays();
  const std::int64_t n = cone.multiplicity();
  if (n > 400) throw LimitError("cone multiplicity " + std::to_string(n) + " is too large to resolve");
  std::optional<IntVector> best;
  std::int64_t best_score = n;
  for (std::int64_t k0 = 0; k0 < n; ++k0)
    for (std::int64_t k1 = 0; k1 < n; ++k1)
      for (std::int64_t k2 = 0; k2 < n; ++k2) {
        if (k0 == 0 && k1 == 0 && k2 == 0) continue;
        IntVector x(3);
        bool integral = true;
        for (std::size_t i = 0; i < 3 && integral; ++i) {
          const auto s = checked_add(checked_add(checked_mul(k0, r[0][i]), checked_mul(k1, r[1][i])),
                                     checked_mul(k2, r[2][i]));
          integral = s % n == 0;
          x[i] = s / n;
        }
        if (!integral || !is_primitive(x)) continue;
        // Stellar subdivision at x replaces ray i by x in a cone of
        // multiplicity k_i.
        const std::int64_t score = std::max({k0, k1, k2});
        if (score < best_score || (score == best_score && best && x < *best)) {
          best_score = score;
          best = x;
        }
      }
  if (!best) throw std::logic_error("non-regular cone without an interior parallelepiped point");
  return *best;
}

Fan resolve_three(Fan fan, std::size_t max_steps) {
  for (std::size_t steps = 0;; ++steps) {
    const auto& cones = fan.maximal_cones();
    auto bad = std::find_if(cones.begin(), cones.end(), [](const Cone& c) { return !is_regular(c); });
    if (bad == cones.end()) return fan;
    if (steps >= max_steps) throw LimitError("resolution exceeded its step budget");
    IntVector r;
    if (!bad->is_simplicial()) {
      r.assign(3, 0);
      for (const auto& ray : bad->rays()) r = add(r, ray);
      r = primitive(r);
    } else {
      r = parallelepiped_center(*bad);
    }
    fan = stellar_subdivide(fan, r);
  }
}

}  // namespace

Fan resolve(const Fan& fan, const NewtonPolyhedron& P, std::size_t max_steps) {
  const std::size_t d = fan.dimension();
  if (d > max_resolution_dimension)
    throw LimitError("resolution is implemented up to dimension " + std::to_string(max_resolution_dimension));
  if (!is_admissible(fan, P).admissible) throw InputError("resolve needs an admissible fan");
  Fan out = fan;
  if (d == 2) out = resolve_two(fan, max_steps);
  if (d == 3) out = resolve_three(fan, max_steps);
  if (!is_regular(out) || !is_admissible(out, P).admissible)
    throw std::logic_error("resolution lost regularity or admissibility");
  return out;
}

}  // namespace jetforge
