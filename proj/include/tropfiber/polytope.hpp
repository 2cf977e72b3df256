#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropfiber/hsystem.hpp"
#include "tropfiber/ratlin.hpp"
#include "tropfiber/tropical_polynomial.hpp"

namespace tropfiber {

/** Half-space <u, normal> >= offset; l(u) = <u, normal> - offset. */
struct Facet {
  IntVector normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

struct Polytope {
  std::size_t dim = 0;
  std::vector<Facet> facets;

  std::size_t facet_count() const { return facets.size(); }
  friend bool operator==(const Polytope&, const Polytope&) = default;
};

struct ValidationReport {
  bool primitive = true;
  bool irredundant = true;
  bool bounded = true;
  bool full_dimensional = true;
  /** One line per failure, facets numbered from 1. */
  std::vector<std::string> messages;

  bool ok() const { return primitive && irredundant && bounded && full_dimensional; }
};

/** Never throws on mathematical failures; those go into the report. */
ValidationReport validate(const Polytope& p);

/** Builds and validates; throws DomainError with the first diagnostic. */
Polytope make_polytope(std::size_t dim, std::vector<Facet> facets);

/** l_j(u); j is 0-based. */
Rational facet_value(const Polytope& p, std::size_t j, const RatVector& u);

/** Strict rows l_j > 0. */
HSystem interior(const Polytope& p);
/** Weak rows l_j >= 0. */
HSystem closed(const Polytope& p);

bool is_interior(const Polytope& p, const RatVector& u);

struct EnergyFiltration {
  RatVector point;
  std::vector<Rational> levels;                  ///< S_1 < S_2 < ...
  std::vector<std::vector<std::size_t>> groups;  ///< 0-based facet indices per level, ascending
  std::vector<std::size_t> a;                    ///< group sizes
  std::vector<std::size_t> d;                    ///< rank jumps
  std::size_t kappa = 0;                         ///< 1-based level index at which the normals span
};

/** Throws DomainError("not interior") unless every l_j(u) > 0. */
EnergyFiltration energy_filtration(const Polytope& p, const RatVector& u);

struct LeadingOrderPotential {
  TropicalPolynomial y_form;  ///< valuations l_j(u)
  TropicalPolynomial x_form;  ///< valuations -lambda_j
};

LeadingOrderPotential leading_order_potential(const Polytope& p, const RatVector& u);

/** x-form potential alone; independent of any point. */
TropicalPolynomial potential_x_form(const Polytope& p);

/** Offset lambda_j -> lambda_j - delta with no validation. */
Polytope shift_offset(const Polytope& p, std::size_t j, const Rational& delta);

/** Offset lambda_j -> lambda_j - delta, revalidated. */
Polytope translate_facet(const Polytope& p, std::size_t j, const Rational& delta);

}  // namespace tropfiber
