#include "tropfiber/polytope.hpp"

#include <algorithm>

#include "tropfiber/error.hpp"

namespace tropfiber {

namespace {

LinearRow facet_row(const Facet& f) { return {f.normal, f.offset}; }

void check_structure(const Polytope& p) {
  if (p.dim == 0) throw ParseError("polytope dimension must be positive");
  if (p.facets.empty()) throw ParseError("polytope has no facets");
  for (std::size_t j = 0; j < p.facets.size(); ++j)
    if (p.facets[j].normal.size() != p.dim)
      throw ParseError("facet " + std::to_string(j + 1) + " normal has wrong dimension");
}

}  // namespace

HSystem interior(const Polytope& p) {
  HSystem s(p.dim);
  for (const auto& f : p.facets) s.strict.push_back(facet_row(f));
  return s;
}

HSystem closed(const Polytope& p) {
  HSystem s(p.dim);
  for (const auto& f : p.facets) s.weak.push_back(facet_row(f));
  return s;
}

ValidationReport validate(const Polytope& p) {
  check_structure(p);
  ValidationReport rep;
  for (std::size_t j = 0; j < p.facets.size(); ++j) {
    const auto& v = p.facets[j].normal;
    if (is_zero(v) || primitive(v) != v) {
      rep.primitive = false;
      rep.messages.push_back("non-primitive normal at facet " + std::to_string(j + 1));
    }
  }
  const HSystem cl = closed(p);
  if (!feasible(interior(p))) {
    rep.full_dimensional = false;
    rep.messages.push_back("empty interior: polytope is not full-dimensional");
  }
  if (!is_bounded(cl)) {
    rep.bounded = false;
    rep.messages.push_back("unbounded: normals do not positively span");
  }
  if (rep.full_dimensional) {
    // Facet j is irredundant iff {l_j = 0} meets P in an (n-1)-dimensional face.
    for (std::size_t j = 0; j < p.facets.size(); ++j) {
      if (is_zero(p.facets[j].normal)) continue;
      HSystem face = cl;
      face.equalities.push_back(facet_row(p.facets[j]));
      if (affine_dim(face) != static_cast<int>(p.dim) - 1) {
        rep.irredundant = false;
        rep.messages.push_back("redundant facet " + std::to_string(j + 1));
      }
    }
  }
  return rep;
}

Polytope make_polytope(std::size_t dim, std::vector<Facet> facets) {
  Polytope p{dim, std::move(facets)};
  const auto rep = validate(p);
  if (!rep.ok()) throw DomainError(rep.messages.front());
  return p;
}

Rational facet_value(const Polytope& p, std::size_t j, const RatVector& u) {
  if (j >= p.facets.size()) throw DomainError("facet index out of range");
  if (u.size() != p.dim) throw ParseError("point of wrong dimension");
  return dot(p.facets[j].normal, u) - p.facets[j].offset;
}

bool is_interior(const Polytope& p, const RatVector& u) {
  for (std::size_t j = 0; j < p.facets.size(); ++j)
    if (facet_value(p, j, u) <= 0) return false;
  return true;
}

EnergyFiltration energy_filtration(const Polytope& p, const RatVector& u) {
  if (!is_interior(p, u)) throw DomainError("not interior: " + to_string(u));
  EnergyFiltration f;
  f.point = u;
  std::vector<Rational> values;
  for (std::size_t j = 0; j < p.facets.size(); ++j) values.push_back(facet_value(p, j, u));
  f.levels = values;
  std::sort(f.levels.begin(), f.levels.end());
  f.levels.erase(std::unique(f.levels.begin(), f.levels.end()), f.levels.end());
  f.groups.resize(f.levels.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const auto it = std::lower_bound(f.levels.begin(), f.levels.end(), values[j]);
    f.groups[static_cast<std::size_t>(it - f.levels.begin())].push_back(j);
  }
  std::vector<IntVector> span;
  std::size_t prev = 0;
  for (std::size_t l = 0; l < f.groups.size(); ++l) {
    f.a.push_back(f.groups[l].size());
    for (auto j : f.groups[l]) span.push_back(p.facets[j].normal);
    const std::size_t r = rank(span);
    f.d.push_back(r - prev);
    prev = r;
    if (f.kappa == 0 && r == p.dim) f.kappa = l + 1;
  }
  return f;
}

TropicalPolynomial potential_x_form(const Polytope& p) {
  std::vector<TropicalTerm> terms;
  for (const auto& fc : p.facets) terms.push_back({-fc.offset, fc.normal});
  return TropicalPolynomial(p.dim, std::move(terms));
}

LeadingOrderPotential leading_order_potential(const Polytope& p, const RatVector& u) {
  if (!is_interior(p, u)) throw DomainError("not interior: " + to_string(u));
  std::vector<TropicalTerm> y;
  for (std::size_t j = 0; j < p.facets.size(); ++j) y.push_back({facet_value(p, j, u), p.facets[j].normal});
  return {TropicalPolynomial(p.dim, std::move(y)), potential_x_form(p)};
}

Polytope shift_offset(const Polytope& p, std::size_t j, const Rational& delta) {
  if (j >= p.facets.size()) throw DomainError("facet index out of range");
  Polytope q = p;
  q.facets[j].offset -= delta;
  return q;
}

Polytope translate_facet(const Polytope& p, std::size_t j, const Rational& delta) {
  const Polytope q = shift_offset(p, j, delta);
  const auto rep = validate(q);
  if (!rep.ok()) throw DomainError("translated polytope invalid: " + rep.messages.front());
  return q;
}

}  // namespace tropfiber
