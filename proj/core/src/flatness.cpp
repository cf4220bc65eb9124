#include "jetforge/flatness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

#include "jetforge/error.hpp"

namespace jetforge {

namespace {

void check_prime(std::uint32_t q, const CountOptions& options) {
  if (!is_prime(q)) throw InputError(std::to_string(q) + " is not prime");
  if (q > options.max_prime)
    throw LimitError("prime " + std::to_string(q) + " exceeds the cap " + std::to_string(options.max_prime));
}

// q^exponent, or LimitError when it exceeds `limit`.
std::uint64_t bounded_power(std::uint64_t q, std::size_t exponent, std::uint64_t limit, const std::string& what) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (value > limit / q) throw LimitError(what + " exceeds the enumeration budget of " + std::to_string(limit));
    value *= q;
  }
  return value;
}

struct CompiledTerm {
  std::uint64_t coefficient;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (variable, exponent)
};

// Evaluates generators over F_q with a table of small powers.
class Evaluator {
 public:
  Evaluator(const std::vector<Polynomial<ModInt>>& generators, std::uint32_t q) : q_(q) {
    for (const auto& g : generators) {
      std::vector<CompiledTerm> terms;
      for (const auto& [e, c] : g.terms()) {
        CompiledTerm t{c.value(), {}};
        for (std::size_t v = 0; v < e.size(); ++v) {
          if (e[v] == 0) continue;
          t.factors.emplace_back(static_cast<std::uint32_t>(v), e[v]);
          max_exponent_ = std::max(max_exponent_, e[v]);
        }
        terms.push_back(std::move(t));
      }
      compiled_.push_back(std::move(terms));
    }
    powers_.resize(static_cast<std::size_t>(q) * (max_exponent_ + 1));
    for (std::uint64_t x = 0; x < q; ++x) {
      std::uint64_t p = 1;
      for (std::uint32_t e = 0; e <= max_exponent_; ++e) {
        powers_[x * (max_exponent_ + 1) + e] = static_cast<std::uint32_t>(p);
        p = p * x % q;
      }
    }
  }

  bool vanishes(std::size_t k, const std::vector<std::uint32_t>& point) const {
    std::uint64_t sum = 0;
    for (const auto& t : compiled_[k]) {
      std::uint64_t value = t.coefficient;
      for (const auto& [v, e] : t.factors) value = value * powers_[point[v] * (max_exponent_ + 1) + e] % q_;
      sum += value;
    }
    return sum % q_ == 0;
  }

 private:
  std::uint64_t q_;
  std::uint32_t max_exponent_ = 0;
  std::vector<std::vector<CompiledTerm>> compiled_;
  std::vector<std::uint32_t> powers_;
};

// Depth-first search over jet-order blocks; generator k only involves blocks
// 0..k, so it is tested as soon as block k is assigned.
class BlockSearch {
 public:
  BlockSearch(const Evaluator& eval, std::size_t ambient, std::size_t order, std::uint32_t q)
      : eval_(eval), ambient_(ambient), order_(order), q_(q), point_(ambient * (order + 1), 0) {
    block_size_ = 1;
    for (std::size_t i = 0; i < ambient; ++i) block_size_ *= q;
  }

  std::uint64_t run(std::uint64_t first_begin, std::uint64_t first_end) {
    std::uint64_t count = 0;
    for (std::uint64_t i = first_begin; i < first_end; ++i) {
      set_block(0, i);
      if (eval_.vanishes(0, point_)) count += descend(1);
    }
    return count;
  }

  // Block indices of blocks 0..depth-1 that satisfy generators 0..depth-1.
  std::vector<std::vector<std::uint64_t>> prefixes(std::size_t depth) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> current;
    collect(0, depth, current, out);
    return out;
  }

  std::uint64_t run_prefix(const std::vector<std::uint64_t>& prefix) {
    for (std::size_t k = 0; k < prefix.size(); ++k) set_block(k, prefix[k]);
    return descend(prefix.size());
  }

  std::uint64_t block_size() const { return block_size_; }

 private:
  void collect(std::size_t k, std::size_t depth, std::vector<std::uint64_t>& current,
               std::vector<std::vector<std::uint64_t>>& out) {
    if (k == depth) {
      out.push_back(current);
      return;
    }
    for (std::uint64_t i = 0; i < block_size_; ++i) {
      set_block(k, i);
      if (!eval_.vanishes(k, point_)) continue;
      current.push_back(i);
      collect(k + 1, depth, current, out);
      current.pop_back();
    }
  }

  void set_block(std::size_t k, std::uint64_t index) {
    for (std::size_t i = ambient_; i-- > 0;) {
      point_[k * ambient_ + i] = static_cast<std::uint32_t>(index % q_);
      index /= q_;
    }
  }

  std::uint64_t descend(std::size_t k) {
    if (k > order_) return 1;
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < block_size_; ++i) {
      set_block(k, i);
      if (eval_.vanishes(k, point_)) count += descend(k + 1);
    }
    return count;
  }

  const Evaluator& eval_;
  std::size_t ambient_;
  std::size_t order_;
  std::uint32_t q_;
  std::uint64_t block_size_ = 1;
  std::vector<std::uint32_t> point_;
};

std::string render_point(const std::vector<ModInt>& point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) s += (i ? "," : "") + std::to_string(point[i].value());
  return s + ")";
}

}  // namespace

std::uint64_t count_points(const JetIdeal<ModInt>& ideal, const CountOptions& options) {
  const std::uint32_t q = ideal.source.coefficient_domain().modulus;
  check_prime(q, options);
  const std::size_t n = ideal.ambient * (ideal.order + 1);
  bounded_power(q, n, options.max_enumeration, "q^" + std::to_string(n));

  const Evaluator eval(ideal.generators, q);
  const unsigned workers = std::max(1U, options.workers);
  BlockSearch planner(eval, ideal.ambient, ideal.order, q);
  if (workers == 1) return planner.run(0, planner.block_size());

  // Split on the shallowest prefix depth that yields enough tasks; the last
  // block is always left to the workers.
  std::vector<std::vector<std::uint64_t>> tasks = planner.prefixes(1);
  for (std::size_t depth = 2; depth <= ideal.order && tasks.size() < 16 * std::size_t{workers}; ++depth)
    tasks = planner.prefixes(depth);
  std::atomic<std::size_t> next{0};
  std::vector<std::uint64_t> partial(workers, 0);
  auto work = [&](unsigned w) {
    BlockSearch search(eval, ideal.ambient, ideal.order, q);
    for (std::size_t t = next++; t < tasks.size(); t = next++) partial[w] += search.run_prefix(tasks[t]);
  };
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  for (auto& t : threads) t.join();
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

CountReport count_points(const FamilyPoly& family, const ParameterAssignment& assignment, std::size_t m,
                         std::uint32_t q, const CountOptions& options) {
  check_prime(q, options);
  const std::size_t n = family.variable_count() * (m + 1);
  bounded_power(q, n, options.max_enumeration, "q^" + std::to_string(n));
  const auto start = std::chrono::steady_clock::now();
  const auto f = specialize_parameters(family, assignment);
  const auto ideal = reduce_mod(jet_ideal(f, m), q);
  CountReport report;
  report.q = q;
  report.m = m;
  report.assignment = assignment;
  report.generators = ideal.generators.size();
  report.count = count_points(ideal, options);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

DimensionEstimate estimate_dimension(std::vector<std::pair<std::uint32_t, std::uint64_t>> counts) {
  std::set<std::uint32_t> primes;
  for (const auto& [q, c] : counts) {
    if (c == 0) throw InputError("cannot estimate a dimension from a zero count (q=" + std::to_string(q) + ")");
    primes.insert(q);
  }
  if (primes.size() < 2) throw InputError("a dimension estimate needs counts at two or more distinct primes");
  double xy = 0;
  double xx = 0;
  for (const auto& [q, c] : counts) {
    const double x = std::log(static_cast<double>(q));
    xy += x * std::log(static_cast<double>(c));
    xx += x * x;
  }
  DimensionEstimate out;
  out.counts = std::move(counts);
  out.slope = xy / xx;
  out.dimension = std::llround(out.slope);
  double squares = 0;
  for (const auto& [q, c] : out.counts) {
    const double r = std::log(static_cast<double>(c)) - out.slope * std::log(static_cast<double>(q));
    squares += r * r;
  }
  out.residual = std::sqrt(squares / static_cast<double>(out.counts.size()));
  return out;
}

FlatnessReport flatness_diagnostic(const FamilyPoly& family, const Symbols& symbols, std::size_t m,
                                   const std::vector<std::uint32_t>& primes,
                                   const std::vector<ParameterAssignment>& samples, const CountOptions& options) {
  if (primes.empty()) throw InputError("flatness diagnostic needs at least one prime");
  FlatnessReport report;
  report.family = to_string(family, symbols);
  report.m = m;
  for (const auto& assignment : samples) {
    SampleReport sample;
    sample.assignment = assignment;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> counts;
    for (auto q : primes) {
      sample.counts.push_back(count_points(family, assignment, m, q, options));
      counts.emplace_back(q, sample.counts.back().count);
    }
    const auto zero = std::find_if(counts.begin(), counts.end(), [](const auto& c) { return c.second == 0; });
    if (zero != counts.end()) {
      sample.note = "no points over F_" + std::to_string(zero->first) + "; dimension not estimated";
    } else if (std::set<std::uint32_t>(primes.begin(), primes.end()).size() < 2) {
      sample.note = "fewer than two primes; dimension not estimated";
    } else {
      sample.estimate = estimate_dimension(std::move(counts));
    }
    report.samples.push_back(std::move(sample));
  }

  std::set<std::int64_t> dimensions;
  std::size_t estimable = 0;
  for (const auto& s : report.samples) {
    if (!s.estimate) continue;
    ++estimable;
    dimensions.insert(s.estimate->dimension);
  }
  if (estimable < 2) {
    report.verdict = insufficient_samples;
    report.statement = "fewer than two samples have a dimension estimate; nothing was compared";
  } else if (dimensions.size() > 1) {
    report.verdict = dimension_jump;
    report.statement = "fiber dimension estimates differ across samples; the reduced jet family is not flat";
  } else {
    report.verdict = consistent;
    report.statement = "fiber dimension estimates agree across samples; this is not a proof of flatness";
  }
  return report;
}

SmoothBundleResult smooth_bundle_check(const Polynomial<Rational>& f, std::size_t m, std::uint32_t q,
                                       const CountOptions& options) {
  check_prime(q, options);
  const std::size_t d = f.variable_count();
  const std::uint64_t points = bounded_power(q, d, options.max_enumeration, "q^" + std::to_string(d));
  const auto g = reduce_mod(f, q);
  std::vector<Polynomial<ModInt>> partials;
  for (std::size_t i = 0; i < d; ++i) partials.push_back(g.partial_derivative(i));

  const auto domain = g.coefficient_domain();
  SmoothBundleResult result;
  std::vector<ModInt> x(d, ModInt::zero(domain));
  for (std::uint64_t index = 0; index < points; ++index) {
    std::uint64_t rest = index;
    for (std::size_t i = d; i-- > 0;) {
      x[i] = ModInt(static_cast<std::int64_t>(rest % q), domain);
      rest /= q;
    }
    if (!evaluate(g, x).is_zero()) continue;
    ++result.base_count;
    if (std::all_of(partials.begin(), partials.end(), [&](const auto& p) { return evaluate(p, x).is_zero(); }))
      throw InputError("hypersurface is singular over F_" + std::to_string(q) + " at " + render_point(x));
  }
  result.count = count_points(reduce_mod(jet_ideal(f, m), q), options);
  std::uint64_t scale = 1;
  for (std::size_t i = 0; i < m * (d - 1); ++i) scale *= q;
  result.expected = result.base_count * scale;
  result.matches = result.count == result.expected;
  return result;
}

}  // namespace jetforge
