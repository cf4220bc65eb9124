#pragma once

#include <nlohmann/json.hpp>

#include "jetforge/fan.hpp"
#include "jetforge/flatness.hpp"
#include "jetforge/jets.hpp"
#include "jetforge/newton.hpp"

namespace jetforge {

using Json = nlohmann::ordered_json;

/// {"m", "ambient", "generators": [...]}, generators printed with jet
/// variable names x{i}_{j} and the user's parameter names.
Json to_json(const JetIdeal<ParamPoly>& ideal, const Symbols& user);
/// Inverse of to_json; throws InputError on a malformed document.
JetIdeal<ParamPoly> jet_ideal_from_json(const Json& doc, const Symbols& user);

/// {"vertices": [[...]], "facets": [{"normal", "offset"}]}
Json to_json(const NewtonPolyhedron& P);
/// Rebuilds the polyhedron from its vertices and checks the stored facets.
NewtonPolyhedron polyhedron_from_json(const Json& doc);

/// {"dim", "rays", "maximal_cones": [[ray indices]]}
Json to_json(const Fan& fan);
Fan fan_from_json(const Json& doc);

/// {"name": value} with integers as numbers and fractions as strings;
/// unassigned parameters are omitted.
Json to_json(const ParameterAssignment& assignment, const Symbols& symbols);

/// {"family", "m", "samples": [{"assignment", "counts": [{"q", "count"}],
/// "dim_estimate"}], "verdict"} plus the verdict statement and per-sample
/// notes.
Json to_json(const FlatnessReport& report, const Symbols& symbols);

}  // namespace jetforge
