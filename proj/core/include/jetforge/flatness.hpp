#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetforge/jets.hpp"

namespace jetforge {

struct CountOptions {
  /// Largest q^{(n+1)(m+1)} that may be enumerated.
  std::uint64_t max_enumeration = 1'000'000'000ULL;
  /// Largest accepted prime.
  std::uint32_t max_prime = 65521;
  unsigned workers = 1;
};

struct CountReport {
  std::uint32_t q = 0;
  std::size_t m = 0;
  ParameterAssignment assignment;
  std::uint64_t count = 0;
  std::size_t generators = 0;
  double elapsed_seconds = 0;
};

/// Number of points of F_q^{(n+1)(m+1)} where every generator vanishes.
/// Throws InputError for a non-prime q and LimitError when q or the
/// enumeration size exceed the configured limits.
std::uint64_t count_points(const JetIdeal<ModInt>& ideal, const CountOptions& options = {});

/// Counts the jet-space fiber of a family over the given parameter values.
CountReport count_points(const FamilyPoly& family, const ParameterAssignment& assignment, std::size_t m,
                         std::uint32_t q, const CountOptions& options = {});

struct DimensionEstimate {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> counts;
  /// Least-squares slope of log(count) against log(q) through the origin.
  double slope = 0;
  std::int64_t dimension = 0;
  /// Root mean square of the fitted log-count residuals.
  double residual = 0;
};

/// Throws InputError when fewer than two distinct primes are given or a
/// count is zero.
DimensionEstimate estimate_dimension(std::vector<std::pair<std::uint32_t, std::uint64_t>> counts);

struct SampleReport {
  ParameterAssignment assignment;
  std::vector<CountReport> counts;
  std::optional<DimensionEstimate> estimate;
  std::string note;
};

struct FlatnessReport {
  std::string family;
  std::size_t m = 0;
  std::vector<SampleReport> samples;
  /// "DIMENSION-JUMP", "CONSISTENT" or "INSUFFICIENT-SAMPLES".
  std::string verdict;
  std::string statement;
};

inline constexpr const char* dimension_jump = "DIMENSION-JUMP";
inline constexpr const char* consistent = "CONSISTENT";
inline constexpr const char* insufficient_samples = "INSUFFICIENT-SAMPLES";

/// Counts every sample at every prime and compares the dimension estimates.
/// A sample with a zero count at some prime gets no estimate. Different
/// estimates across samples give DIMENSION-JUMP; equal ones CONSISTENT;
/// fewer than two estimable samples INSUFFICIENT-SAMPLES.
FlatnessReport flatness_diagnostic(const FamilyPoly& family, const Symbols& symbols, std::size_t m,
                                   const std::vector<std::uint32_t>& primes,
                                   const std::vector<ParameterAssignment>& samples, const CountOptions& options = {});

struct SmoothBundleResult {
  bool matches = false;
  std::uint64_t count = 0;       // points of the m-jet space
  std::uint64_t base_count = 0;  // points of V over F_q
  std::uint64_t expected = 0;    // base_count * q^{m (n+1-1)}
};

/// For f smooth over F_q, compares the m-jet count with |V(F_q)| q^{m n}
/// where n + 1 is the number of variables. Throws InputError naming a
/// singular point when f is not smooth over F_q.
SmoothBundleResult smooth_bundle_check(const Polynomial<Rational>& f, std::size_t m, std::uint32_t q,
                                       const CountOptions& options = {});

}  // namespace jetforge
