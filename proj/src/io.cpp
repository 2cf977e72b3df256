#include "tropfiber/io.hpp"

#include <fstream>
#include <sstream>

#include "tropfiber/error.hpp"

namespace tropfiber {

namespace {

Json rows_to_json(const std::vector<LinearRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(Json::array({to_json(r.coeffs), to_json(r.rhs)}));
  return out;
}

std::vector<LinearRow> rows_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("system rows must be an array");
  std::vector<LinearRow> out;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != 2) throw ParseError("system row must be [coeffs, rhs]");
    LinearRow row{int_vector_from_json(r[0]), rational_from_json(r[1])};
    if (row.coeffs.size() != dim) throw ParseError("system row of wrong dimension");
    out.push_back(std::move(row));
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t dim_field(const Json& j) {
  const auto& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() <= 0) throw ParseError("'dim' must be a positive integer");
  return d.get<std::size_t>();
}

Rational offset_from_json(const Json& j, const Params& params) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    bool negate = false;
    std::string name = s;
    if (!name.empty() && name[0] == '-') {
      negate = true;
      name = name.substr(1);
    }
    if (auto it = params.find(name); it != params.end()) return negate ? -it->second : it->second;
  }
  return rational_from_json(j);
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
      out.push_back(x.convert_to<long long>());
    else
      out.push_back(x.str());
  }
  return out;
}

Json to_json(const HSystem& s) {
  Json out;
  out["dim"] = s.dim;
  out["eq"] = rows_to_json(s.equalities);
  out["ge"] = rows_to_json(s.weak);
  out["gt"] = rows_to_json(s.strict);
  return out;
}

Json to_json(const PLComplex& c) {
  Json out;
  out["dim"] = c.dim;
  out["provenance"] = c.provenance;
  Json cells = Json::array();
  for (const auto& cell : c.cells) {
    Json jc;
    jc["system"] = to_json(cell.system);
    jc["dim"] = cell.dim;
    jc["witness"] = to_json(cell.witness);
    cells.push_back(std::move(jc));
  }
  out["cells"] = std::move(cells);
  return out;
}

Json to_json(const Polytope& p) {
  Json out;
  out["dim"] = p.dim;
  Json facets = Json::array();
  for (const auto& f : p.facets) {
    Json jf;
    jf["normal"] = to_json(f.normal);
    jf["offset"] = to_json(f.offset);
    facets.push_back(std::move(jf));
  }
  out["facets"] = std::move(facets);
  return out;
}

Json to_json(const DistanceInterval& d) {
  Json out;
  out["lower"] = to_json(d.lower);
  out["upper"] = to_json(d.upper);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational string, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array, got " + j.dump());
  IntVector out;
  for (const auto& x : j) {
    if (x.is_number_integer())
      out.emplace_back(x.get<long long>());
    else if (x.is_string()) {
      const Rational q = parse_rational(x.get<std::string>());
      if (denominator(q) != 1) throw ParseError("expected an integer, got " + x.dump());
      out.push_back(numerator(q));
    } else {
      throw ParseError("expected an integer, got " + x.dump());
    }
  }
  return out;
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a rational array, got " + j.dump());
  RatVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

HSystem hsystem_from_json(const Json& j) {
  HSystem s(dim_field(j));
  s.equalities = rows_from_json(field(j, "eq"), s.dim);
  s.weak = rows_from_json(field(j, "ge"), s.dim);
  s.strict = rows_from_json(field(j, "gt"), s.dim);
  return s;
}

PLComplex complex_from_json(const Json& j) {
  PLComplex c;
  c.dim = dim_field(j);
  if (j.contains("provenance")) c.provenance = j.at("provenance").get<std::string>();
  for (const auto& jc : field(j, "cells")) {
    Cell cell;
    cell.system = hsystem_from_json(field(jc, "system"));
    if (cell.system.dim != c.dim) throw ParseError("cell of wrong dimension");
    cell.dim = field(jc, "dim").get<int>();
    cell.witness = rat_vector_from_json(field(jc, "witness"));
    c.cells.push_back(std::move(cell));
  }
  return c;
}

TropicalPolynomial polynomial_from_json(const Json& j) {
  const std::size_t n = dim_field(j);
  std::vector<TropicalTerm> terms;
  for (const auto& t : field(j, "terms")) {
    TropicalTerm term{rational_from_json(field(t, "valuation")), int_vector_from_json(field(t, "exponent"))};
    if (term.exponent.size() != n) throw ParseError("term exponent of wrong dimension");
    terms.push_back(std::move(term));
  }
  if (terms.empty()) throw ParseError("polynomial has no terms");
  return TropicalPolynomial(n, std::move(terms));
}

Polytope polytope_from_json(const Json& j, const Params& overrides) {
  Params params;
  if (j.is_object() && j.contains("params")) {
    const auto& jp = j.at("params");
    if (!jp.is_object()) throw ParseError("'params' must be an object");
    for (const auto& [name, value] : jp.items()) params[name] = rational_from_json(value);
  }
  for (const auto& [name, value] : overrides) {
    if (!params.count(name)) throw ParseError("unknown parameter '" + name + "'");
    params[name] = value;
  }
  Polytope p;
  p.dim = dim_field(j);
  const auto& facets = field(j, "facets");
  if (!facets.is_array() || facets.empty()) throw ParseError("'facets' must be a nonempty array");
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const auto& jf = facets[k];
    Facet f{int_vector_from_json(field(jf, "normal")), offset_from_json(field(jf, "offset"), params)};
    if (f.normal.size() != p.dim)
      throw ParseError("dimension mismatch: facet " + std::to_string(k + 1) + " normal has " +
                       std::to_string(f.normal.size()) + " entries, expected " + std::to_string(p.dim));
    p.facets.push_back(std::move(f));
  }
  return p;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

Polytope load_polytope(const std::string& path, const Params& overrides) {
  Polytope p = polytope_from_json(read_json_file(path), overrides);
  const auto rep = validate(p);
  if (!rep.ok()) throw DomainError(rep.messages.front());
  return p;
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.empty()) throw ParseError("empty vector '" + text + "'");
  return parts;
}

}  // namespace

IntVector parse_int_vector(const std::string& text) {
  IntVector out;
  for (const auto& part : split_commas(text)) {
    const Rational q = parse_rational(part);
    if (denominator(q) != 1) throw ParseError("expected integers in '" + text + "'");
    out.push_back(numerator(q));
  }
  return out;
}

RatVector parse_rat_vector(const std::string& text) {
  RatVector out;
  for (const auto& part : split_commas(text)) out.push_back(parse_rational(part));
  return out;
}

}  // namespace tropfiber
