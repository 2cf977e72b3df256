#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "tropfiber/metrics.hpp"
#include "tropfiber/polytope.hpp"
#include "tropfiber/tropical.hpp"

namespace tropfiber {

using Json = nlohmann::ordered_json;

/** Named rational parameters substituted into templated offsets such as "c" or "-c". */
using Params = std::map<std::string, Rational>;

Json to_json(const Rational& q);
Json to_json(const RatVector& v);
Json to_json(const IntVector& v);
Json to_json(const HSystem& s);
Json to_json(const PLComplex& c);
Json to_json(const Polytope& p);
Json to_json(const DistanceInterval& d);

/** Accepts "p/q" strings or JSON integers. */
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);
HSystem hsystem_from_json(const Json& j);
PLComplex complex_from_json(const Json& j);
TropicalPolynomial polynomial_from_json(const Json& j);

/**
 * Structural parse only; no validation. A "params" object in the document
 * supplies defaults which `overrides` replace.
 */
Polytope polytope_from_json(const Json& j, const Params& overrides = {});

/** Parses and validates; DomainError carries the first validation failure. */
Polytope load_polytope(const std::string& path, const Params& overrides = {});

Json read_json_file(const std::string& path);

/** "a,b,c" into a vector. */
IntVector parse_int_vector(const std::string& text);
RatVector parse_rat_vector(const std::string& text);

}  // namespace tropfiber
