#ifndef LOCALH_IO_JSON_HPP
#define LOCALH_IO_JSON_HPP

#include <json.hpp>

#include <string>

#include "localh/complex.hpp"
#include "localh/geometry.hpp"
#include "localh/intpoly.hpp"

namespace localh {

using Json = nlohmann::ordered_json;

// {"d": int, "vertices": [{"id": str, "sigma": [int]}], "facets": [[str]],
//  "sigma_overrides": [{"face": [str], "sigma": [int]}]}
// with 1-based coordinate integers in "sigma".
TriangulationInput triangulation_from_json(const Json& j);
Json triangulation_to_json(const TriangulationInput& in);

// {"coords": {id: ["p/q", ...]}, "heights": {id: "p/q"}}
Realization realization_from_json(const Json& j);
Json realization_to_json(const Realization& r);

// Polynomials serialize as coefficient arrays from degree 0.
Json intpoly_to_json(const IntPoly& p, int min_degree);

// Parses a JSON document, mapping parse failures to input_error.
Json parse_json_text(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace localh

#endif
