#include "jetforge/newton.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "jetforge/error.hpp"
#include "jetforge/text.hpp"

namespace jetforge {

namespace {

IntVector to_int_vector(const ExponentVector& e) {
  IntVector v;
  v.reserve(e.size());
  for (auto x : e) v.push_back(static_cast<std::int64_t>(x));
  return v;
}

bool dominates(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
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

void require_direction(std::span<const std::int64_t> p, std::size_t dimension) {
  if (p.size() != dimension)
    throw InputError("direction has " + std::to_string(p.size()) + " entries, expected " + std::to_string(dimension));
  if (!is_nonnegative(p)) throw InputError("support function needs a direction with nonnegative entries");
}

}  // namespace

std::vector<IntVector> exponent_support(const Polynomial<Rational>& f) {
  if (f.is_zero()) throw InputError("the zero polynomial has no Newton polyhedron");
  std::vector<IntVector> out;
  for (const auto& term : f.terms()) out.push_back(to_int_vector(term.first));
  return out;
}

NewtonPolyhedron NewtonPolyhedron::from_points(std::vector<IntVector> points) {
  if (points.empty()) throw InputError("Newton polyhedron of an empty point set");
  const std::size_t d = points.front().size();
  if (d == 0) throw InputError("Newton polyhedron in dimension 0");
  if (d > max_polyhedral_dimension)
    throw LimitError("ambient dimension " + std::to_string(d) + " exceeds the polyhedral cap of " +
                     std::to_string(max_polyhedral_dimension));
  for (const auto& p : points) {
    if (p.size() != d) throw InputError("points of a Newton polyhedron must share one dimension");
    if (!is_nonnegative(p)) throw InputError("exponents must be nonnegative");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Points dominating another point are never vertices and never needed to
  // span a facet.
  std::vector<IntVector> minimal;
  for (const auto& p : points) {
    const bool dominated = std::any_of(points.begin(), points.end(),
                                       [&](const IntVector& o) { return o != p && dominates(p, o); });
    if (!dominated) minimal.push_back(p);
  }

  std::set<IntVector> normals;
  for (std::size_t k = 1; k <= std::min(d, minimal.size()); ++k) {
    for_each_subset(minimal.size(), k, [&](const std::vector<std::size_t>& chosen) {
      for_each_subset(d, d - k, [&](const std::vector<std::size_t>& directions) {
        IntMatrix rows;
        const auto& base = minimal[chosen[0]];
        for (std::size_t i = 1; i < k; ++i) {
          IntVector diff(d);
          for (std::size_t c = 0; c < d; ++c) diff[c] = checked_add(minimal[chosen[i]][c], -base[c]);
          rows.push_back(std::move(diff));
        }
        for (auto j : directions) rows.push_back(unit_vector(d, j));
        auto normal = primitive(cofactor_normal(rows));
        if (content(normal) == 0) return;
        if (!is_nonnegative(normal)) {
          for (auto& x : normal) x = -x;
          if (!is_nonnegative(normal)) return;
        }
        const auto at_base = dot(normal, base);
        for (const auto& p : minimal)
          if (dot(normal, p) < at_base) return;
        normals.insert(std::move(normal));
      });
    });
  }

  NewtonPolyhedron P;
  P.dimension_ = d;
  for (const auto& n : normals) {
    std::int64_t offset = dot(n, minimal.front());
    for (const auto& p : minimal) offset = std::min(offset, dot(n, p));
    P.facets_.push_back({n, offset});
  }
  for (const auto& v : minimal) {
    IntMatrix tight;
    for (const auto& facet : P.facets_)
      if (dot(facet.normal, v) == facet.offset) tight.push_back(facet.normal);
    if (rank(tight) == d) P.vertices_.push_back(v);
  }
  return P;
}

std::int64_t NewtonPolyhedron::support(std::span<const std::int64_t> p) const {
  require_direction(p, dimension_);
  std::int64_t best = dot(p, vertices_.front());
  for (const auto& v : vertices_) best = std::min(best, dot(p, v));
  return best;
}

std::vector<IntVector> NewtonPolyhedron::attaining_vertices(std::span<const std::int64_t> p) const {
  const auto h = support(p);
  std::vector<IntVector> out;
  for (const auto& v : vertices_)
    if (dot(p, v) == h) out.push_back(v);
  return out;
}

bool NewtonPolyhedron::contains(std::span<const std::int64_t> e) const {
  if (e.size() != dimension_)
    throw InputError("point has " + std::to_string(e.size()) + " entries, expected " + std::to_string(dimension_));
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& facet) { return dot(facet.normal, e) >= facet.offset; });
}

std::vector<std::size_t> NewtonPolyhedron::tight_facets(std::span<const std::int64_t> x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (dot(facets_[i].normal, x) == facets_[i].offset) out.push_back(i);
  return out;
}

std::vector<Face> NewtonPolyhedron::faces() const {
  // Vertex sets of faces: facet vertex sets and single vertices, closed under
  // intersection.
  using VertexSet = std::vector<std::size_t>;
  std::set<VertexSet> found;
  std::vector<VertexSet> work;
  auto insert = [&](VertexSet s) {
    if (!s.empty() && found.insert(s).second) work.push_back(std::move(s));
  };
  for (std::size_t v = 0; v < vertices_.size(); ++v) insert({v});
  for (const auto& facet : facets_) {
    VertexSet s;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (dot(facet.normal, vertices_[v]) == facet.offset) s.push_back(v);
    insert(std::move(s));
  }
  while (!work.empty()) {
    const auto s = work.back();
    work.pop_back();
    const std::vector<VertexSet> snapshot(found.begin(), found.end());
    for (const auto& t : snapshot) {
      VertexSet both;
      std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
      insert(std::move(both));
    }
  }

  std::vector<Face> out;
  for (const auto& s : found) {
    Face face;
    face.direction.assign(dimension_, 0);
    for (const auto& facet : facets_) {
      const bool contains_all = std::all_of(s.begin(), s.end(), [&](std::size_t v) {
        return dot(facet.normal, vertices_[v]) == facet.offset;
      });
      if (contains_all) face.direction = add(face.direction, facet.normal);
    }
    // The face has a recession direction e_j exactly when no facet containing
    // it has a positive j-th normal entry.
    face.compact = std::all_of(face.direction.begin(), face.direction.end(), [](auto x) { return x > 0; });
    face.direction = primitive(face.direction);
    for (auto v : s) face.vertices.push_back(vertices_[v]);
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

std::vector<Face> NewtonPolyhedron::compact_faces() const {
  auto all = faces();
  std::erase_if(all, [](const Face& f) { return !f.compact; });
  return all;
}

NewtonPolyhedron newton_polyhedron(const Polynomial<Rational>& f) {
  return NewtonPolyhedron::from_points(exponent_support(f));
}

Polynomial<Rational> face_polynomial(const Polynomial<Rational>& f, std::span<const std::int64_t> p) {
  if (f.is_zero()) throw InputError("face polynomial of the zero polynomial");
  require_direction(p, f.variable_count());
  if (content(p) == 0) throw InputError("face polynomial needs a nonzero direction");
  std::int64_t h = -1;
  for (const auto& term : f.terms()) {
    const auto value = dot(p, to_int_vector(term.first));
    if (h < 0 || value < h) h = value;
  }
  std::vector<Polynomial<Rational>::Term> terms;
  for (const auto& term : f.terms())
    if (dot(p, to_int_vector(term.first)) == h) terms.push_back(term);
  return Polynomial<Rational>::from_terms(f.domain(), std::move(terms));
}

GammaReport gamma_deformation_valid(const Polynomial<Rational>& f,
                                    std::span<const Polynomial<Rational>> perturbations) {
  const auto P = newton_polyhedron(f);
  GammaReport report;
  for (std::size_t j = 0; j < perturbations.size(); ++j) {
    if (perturbations[j].variable_count() != f.variable_count())
      throw InputError("perturbation " + std::to_string(j + 1) + " has a different variable count");
    for (const auto& term : perturbations[j].terms()) {
      auto e = to_int_vector(term.first);
      if (!P.contains(e)) report.violations.push_back({j, std::move(e)});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::nondegenerate: return "nondegenerate";
    case Verdict::degenerate: return "degenerate";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Dense univariate polynomials over Q, coefficient of z^k at index k.
using Dense = std::vector<Rational>;

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Dense remainder(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense monic_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  const Rational lead = a.back();
  for (auto& c : a) c = c / lead;
  return a;
}

Dense derivative(const Dense& a) {
  Dense out;
  for (std::size_t k = 1; k < a.size(); ++k) out.push_back(a[k] * Rational(static_cast<long>(k)));
  return out;
}

Rational evaluate_dense(const Dense& a, const Rational& z) {
  Rational acc;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// A rational root by the rational root test, tried only when the extreme
// coefficients are small enough for trial division.
std::optional<Rational> rational_root(const Dense& monic) {
  mpz_class lcm = 1;
  for (const auto& c : monic) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> integral;
  for (const auto& c : monic) integral.push_back(mpz_class(c.value() * lcm));
  const mpz_class limit = 1000000;
  if (abs(integral.front()) > limit || abs(integral.back()) > limit) return std::nullopt;
  for (const auto& p : divisors(integral.front()))
    for (const auto& q : divisors(integral.back()))
      for (int sign : {1, -1}) {
        const Rational z(mpq_class(sign * p, q));
        if (evaluate_dense(monic, z).is_zero()) return z;
      }
  return std::nullopt;
}

Rational rational_power(const Rational& z, std::int64_t exponent) {
  Rational base = exponent < 0 ? z.inverse() : z;
  Rational out(1);
  for (std::int64_t i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out *= base;
  return out;
}

// Extended Euclid: returns (x, y) with a*x + b*y = gcd(a, b).
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) {
  if (b == 0) return {1, 0};
  auto [x, y] = bezout(b, a % b);
  return {y, x - (a / b) * y};
}

bool vanishes_with_partials(const Polynomial<Rational>& g, std::span<const Rational> point) {
  if (!evaluate(g, point).is_zero()) return false;
  for (std::size_t i = 0; i < g.variable_count(); ++i)
    if (!evaluate(g.partial_derivative(i), point).is_zero()) return false;
  return true;
}

// First torus point of F_q^d (lexicographic, coordinates in 1..q-1) where g
// and all its partials vanish.
std::optional<std::vector<ModInt>> torus_search(const Polynomial<ModInt>& g, unsigned workers) {
  const std::size_t d = g.variable_count();
  const auto domain = g.coefficient_domain();
  const std::uint64_t side = domain.modulus - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= side;
  std::vector<Polynomial<ModInt>> system{g};
  for (std::size_t i = 0; i < d; ++i) system.push_back(g.partial_derivative(i));

  auto point_at = [&](std::uint64_t index) {
    std::vector<ModInt> point(d);
    for (std::size_t i = d; i-- > 0;) {
      point[i] = ModInt(static_cast<std::int64_t>(index % side + 1), domain);
      index /= side;
    }
    return point;
  };
  auto hit = [&](const std::vector<ModInt>& point) {
    return std::all_of(system.begin(), system.end(), [&](const auto& h) { return evaluate(h, point).is_zero(); });
  };

  workers = std::max(1U, workers);
  std::vector<std::uint64_t> first(workers, total);
  std::atomic<std::uint64_t> best{total};
  auto scan = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    for (std::uint64_t i = begin; i < end && i < best.load(); ++i) {
      if (hit(point_at(i))) {
        first[w] = i;
        auto current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
        return;
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    for (auto& t : threads) t.join();
  }
  const auto winner = *std::min_element(first.begin(), first.end());
  if (winner == total) return std::nullopt;
  return point_at(winner);
}

std::vector<std::string> render(const std::vector<ModInt>& point) {
  std::vector<std::string> out;
  for (const auto& x : point) out.push_back(std::to_string(x.value()));
  return out;
}

constexpr std::uint32_t fallback_primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

NondegeneracyResult exact_two_variables(const Polynomial<Rational>& f, const std::vector<Face>& faces) {
  NondegeneracyResult result;
  for (const auto& face : faces) {
    if (face.vertices.size() < 2) continue;
    const auto& p = face.direction;
    // Lattice points of the edge run from the endpoint with the largest
    // x-exponent (A, B) in steps of (-p2, p1).
    const auto& start = face.vertices.back();
    const auto& stop = face.vertices.front();
    const std::int64_t length = (start[0] - stop[0]) / p[1];
    Dense coefficients;
    for (std::int64_t k = 0; k <= length; ++k) {
      const ExponentVector e{static_cast<std::uint32_t>(start[0] - k * p[1]),
                             static_cast<std::uint32_t>(start[1] + k * p[0])};
      coefficients.push_back(f.coefficient(e));
    }
    const auto g = monic_gcd(coefficients, derivative(coefficients));
    if (g.size() < 2) continue;

    DegeneracyWitness witness;
    witness.face_direction = p;
    std::vector<Polynomial<Rational>::Term> factor_terms;
    for (std::size_t k = 0; k < g.size(); ++k)
      factor_terms.emplace_back(ExponentVector{static_cast<std::uint32_t>(k)}, g[k]);
    witness.repeated_factor = to_string(Polynomial<Rational>::from_terms(rational_ring(1), std::move(factor_terms)),
                                        std::vector<std::string>{"z"});
    const auto face_poly = face_polynomial(f, p);
    if (auto z = rational_root(g)) {
      // Any torus point with y^{p1} / x^{p2} = z works; take x = z^a, y = z^b
      // with b*p1 - a*p2 = 1.
      const auto [u, v] = bezout(p[0], p[1]);
      const std::vector<Rational> point{rational_power(*z, -v), rational_power(*z, u)};
      if (!vanishes_with_partials(face_poly, point))
        throw std::logic_error("exact degeneracy witness failed verification");
      witness.point = {point[0].to_string(), point[1].to_string()};
    } else {
      for (auto q : fallback_primes) {
        if (q <= f.total_degree()) continue;
        try {
          if (auto hit = torus_search(reduce_mod(face_poly, q), 1)) {
            witness.modulus = q;
            witness.point = render(*hit);
            break;
          }
        } catch (const DomainError&) {
        }
      }
      if (witness.point.empty())
        result.notes.push_back("repeated root is irrational; no witness point is reported");
    }
    result.verdict = Verdict::degenerate;
    result.witness = std::move(witness);
    return result;
  }
  result.verdict = Verdict::nondegenerate;
  return result;
}

}  // namespace

NondegeneracyResult nondegenerate(const Polynomial<Rational>& f, const NondegeneracyOptions& options) {
  const auto P = newton_polyhedron(f);
  const auto faces = P.compact_faces();
  const std::size_t d = f.variable_count();
  using Mode = NondegeneracyOptions::Mode;

  if (options.mode == Mode::sample && options.primes.empty())
    throw InputError("sample mode needs at least one prime");
  for (auto q : options.primes)
    if (!is_prime(q)) throw InputError(std::to_string(q) + " is not prime");
  if (d == 2) return exact_two_variables(f, faces);
  if (std::all_of(faces.begin(), faces.end(), [](const Face& face) { return face.vertices.size() == 1; })) {
    // Monomial face polynomials never vanish on the torus.
    return {Verdict::nondegenerate, std::nullopt, {}};
  }
  if (options.mode == Mode::exact2d)
    throw InputError("the exact test handles two variables only; use sample mode");

  NondegeneracyResult result;
  const std::uint64_t bound = options.torus_bound.value_or(100'000'000ULL);
  for (const auto& face : faces) {
    if (face.vertices.size() < 2) continue;
    const auto face_poly = face_polynomial(f, face.direction);
    for (auto q : options.primes) {
      if (q <= f.total_degree()) {
        result.notes.push_back("skipped q=" + std::to_string(q) + ": not larger than the degree of f");
        continue;
      }
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < d; ++i) {
        if (size > bound / (q - 1)) throw LimitError("torus of F_" + std::to_string(q) + " exceeds the search bound");
        size *= q - 1;
      }
      Polynomial<ModInt> reduced;
      try {
        reduced = reduce_mod(face_poly, q);
      } catch (const DomainError&) {
        result.notes.push_back("skipped q=" + std::to_string(q) + ": a coefficient has q in its denominator");
        continue;
      }
      if (auto hit = torus_search(reduced, options.workers)) {
        result.verdict = Verdict::degenerate;
        result.witness = DegeneracyWitness{face.direction, q, render(*hit), {}};
        return result;
      }
    }
  }
  result.verdict = Verdict::inconclusive;
  result.notes.push_back("no torus witness found for the given primes");
  return result;
}

bool integral_closure_member(std::span<const std::int64_t> e, std::span<const std::int64_t> a) {
  if (e.size() != a.size()) throw InputError("exponent and power lists differ in length");
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw InputError("pure powers must have positive exponents");
    if (e[i] < 0) throw InputError("exponents must be nonnegative");
    sum += Rational(e[i], a[i]);
  }
  return sum >= Rational(1);
}

bool integral_closure_member(const Polynomial<Rational>& f, std::span<const std::int64_t> a) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& term) { return integral_closure_member(to_int_vector(term.first), a); });
}

}  // namespace jetforge
