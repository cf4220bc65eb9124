#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jetforge/fan.hpp"
#include "support/oracles.hpp"

namespace jetforge::testing {

// Calls visit(p) for every p in [0, box]^d.
template <class Visit>
void for_each_point(std::size_t d, std::int64_t box, Visit&& visit) {
  std::vector<std::int64_t> p(d, 0);
  while (true) {
    visit(p);
    std::size_t i = 0;
    while (i < d && p[i] == box) p[i++] = 0;
    if (i == d) return;
    ++p[i];
  }
}

// Normal-fan grouping oracle. Two directions lie in the same relatively open
// cone of the Newton fan iff they select the same face of P(f): the same
// minimizing exponents and the same recession directions (zero coordinates).
// Returns a description of the first disagreement, or "" when the fan and
// the grouping agree on every direction in [0, box]^d.
inline std::string normal_fan_mismatch(const Polynomial<Rational>& f, const Fan& fan, std::int64_t box) {
  const auto support = exponent_support(f);
  const auto cones = fan.cones();
  using FaceKey = std::pair<std::set<std::vector<std::int64_t>>, std::vector<bool>>;
  std::map<FaceKey, std::size_t> by_face;
  std::map<std::size_t, FaceKey> by_cone;
  std::string problem;
  auto show = [](const std::vector<std::int64_t>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
  };
  for_each_point(f.variable_count(), box, [&](const std::vector<std::int64_t>& p) {
    if (!problem.empty()) return;
    std::vector<std::size_t> holders;
    for (std::size_t c = 0; c < cones.size(); ++c)
      if (cones[c].contains_in_relative_interior(p)) holders.push_back(c);
    if (holders.size() != 1) {
      problem = show(p) + " lies in the relative interior of " + std::to_string(holders.size()) + " cones";
      return;
    }
    std::vector<bool> zeros;
    for (auto v : p) zeros.push_back(v == 0);
    const FaceKey face{attaining(support, p), zeros};
    if (by_face.emplace(face, holders[0]).first->second != holders[0])
      problem = show(p) + ": one face spread over two cones";
    else if (by_cone.emplace(holders[0], face).first->second != face)
      problem = show(p) + ": one cone selects two faces";
  });
  return problem;
}

}  // namespace jetforge::testing
