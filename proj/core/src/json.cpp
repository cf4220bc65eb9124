#include "jetforge/json.hpp"

#include "jetforge/error.hpp"
#include "jetforge/text.hpp"

namespace jetforge {

namespace {

template <class T>
T field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("JSON document lacks \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("JSON field \"") + key + "\" has the wrong type: " + e.what());
  }
}

}  // namespace

Json to_json(const JetIdeal<ParamPoly>& ideal, const Symbols& user) {
  const auto symbols = jet_symbols(user, ideal.order);
  Json generators = Json::array();
  for (const auto& g : ideal.generators) generators.push_back(to_string(g, symbols));
  return Json{{"m", ideal.order}, {"ambient", ideal.ambient}, {"generators", std::move(generators)}};
}

JetIdeal<ParamPoly> jet_ideal_from_json(const Json& doc, const Symbols& user) {
  JetIdeal<ParamPoly> ideal;
  ideal.order = field<std::size_t>(doc, "m");
  ideal.ambient = field<std::size_t>(doc, "ambient");
  if (ideal.ambient != user.variables().size())
    throw InputError("JSON jet ideal has " + std::to_string(ideal.ambient) + " ambient variables, expected " +
                     std::to_string(user.variables().size()));
  const auto symbols = jet_symbols(user, ideal.order);
  for (const auto& g : field<std::vector<std::string>>(doc, "generators")) ideal.generators.push_back(parse(g, symbols));
  if (ideal.generators.size() != ideal.order + 1) throw InputError("JSON jet ideal must have m+1 generators");
  // The source polynomial is recovered from G_0 by renaming x{i}_0 to x_i.
  std::vector<FamilyPoly::Term> terms;
  for (const auto& [e, c] : ideal.generators[0].terms())
    terms.emplace_back(ExponentVector(std::vector<std::uint32_t>(e.begin(), e.begin() + static_cast<long>(ideal.ambient))), c);
  ideal.source = FamilyPoly::from_terms(family_ring(ideal.ambient, user.parameters().size()), std::move(terms));
  return ideal;
}

Json to_json(const NewtonPolyhedron& P) {
  Json facets = Json::array();
  for (const auto& f : P.facets()) facets.push_back(Json{{"normal", f.normal}, {"offset", f.offset}});
  return Json{{"vertices", P.vertices()}, {"facets", std::move(facets)}};
}

NewtonPolyhedron polyhedron_from_json(const Json& doc) {
  auto P = NewtonPolyhedron::from_points(field<std::vector<IntVector>>(doc, "vertices"));
  std::vector<Facet> facets;
  for (const auto& f : field<Json>(doc, "facets"))
    facets.push_back({field<IntVector>(f, "normal"), field<std::int64_t>(f, "offset")});
  if (facets != P.facets()) throw InputError("JSON facets do not match the vertices");
  return P;
}

Json to_json(const Fan& fan) {
  return Json{{"dim", fan.dimension()}, {"rays", fan.rays()}, {"maximal_cones", fan.maximal_cone_indices()}};
}

Fan fan_from_json(const Json& doc) {
  const auto dim = field<std::size_t>(doc, "dim");
  const auto rays = field<std::vector<IntVector>>(doc, "rays");
  std::vector<Cone> cones;
  for (const auto& indices : field<std::vector<std::vector<std::size_t>>>(doc, "maximal_cones")) {
    std::vector<IntVector> generators;
    for (auto i : indices) {
      if (i >= rays.size()) throw InputError("JSON fan refers to ray " + std::to_string(i) + " which does not exist");
      generators.push_back(rays[i]);
    }
    cones.emplace_back(dim, std::move(generators));
  }
  return Fan(dim, std::move(cones));
}

Json to_json(const ParameterAssignment& assignment, const Symbols& symbols) {
  Json out = Json::object();
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    if (!assignment[j]) continue;
    const auto& value = *assignment[j];
    const auto& name = symbols.parameters().at(j);
    if (value.is_integer() && value.numerator().fits_slong_p())
      out[name] = value.numerator().get_si();
    else
      out[name] = value.to_string();
  }
  return out;
}

Json to_json(const FlatnessReport& report, const Symbols& symbols) {
  Json samples = Json::array();
  for (const auto& s : report.samples) {
    Json counts = Json::array();
    for (const auto& c : s.counts) counts.push_back(Json{{"q", c.q}, {"count", c.count}});
    Json sample{{"assignment", to_json(s.assignment, symbols)},
                {"counts", std::move(counts)},
                {"dim_estimate", s.estimate ? Json(s.estimate->dimension) : Json(nullptr)},
                {"slope", s.estimate ? Json(s.estimate->slope) : Json(nullptr)}};
    if (!s.note.empty()) sample["note"] = s.note;
    samples.push_back(std::move(sample));
  }
  return Json{{"family", report.family},
              {"m", report.m},
              {"samples", std::move(samples)},
              {"verdict", report.verdict},
              {"statement", report.statement}};
}

}  // namespace jetforge
