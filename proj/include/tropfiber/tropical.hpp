#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropfiber/hsystem.hpp"
#include "tropfiber/polytope.hpp"
#include "tropfiber/tropical_polynomial.hpp"

namespace tropfiber {

struct Cell {
  HSystem system;  ///< canonical (remove_redundant) form
  int dim = -1;
  RatVector witness;  ///< relative-interior point
  /** Generating term pair for tropical-polynomial cells (0-based); empty otherwise. */
  std::vector<std::size_t> tags;
};

struct PLComplex {
  std::size_t dim = 0;
  std::string provenance;
  std::vector<Cell> cells;

  bool empty() const { return cells.empty(); }
  /** Point lies in some cell. */
  bool contains_point(const RatVector& u) const;
};

/**
 * Feasible cells only, each reduced to canonical form; cells contained in
 * another cell are dropped and the rest sorted deterministically.
 */
std::vector<Cell> canonicalize(std::vector<Cell> cells, std::size_t dim);

/** Locus where the minimum is attained by at least two terms, within ambient. */
PLComplex trop_poly(const TropicalPolynomial& f, const std::optional<HSystem>& ambient = std::nullopt);

/** Facets j with <m, v_j> != 0 (0-based). */
std::vector<std::size_t> support(const Polytope& p, const IntVector& m);

PLComplex trop_relative(const Polytope& p, const IntVector& m,
                        const std::optional<HSystem>& ambient = std::nullopt);

/** trop_relative(p, e_i); i is 0-based. */
PLComplex log_derivative_trop(const Polytope& p, std::size_t i,
                              const std::optional<HSystem>& ambient = std::nullopt);

PLComplex intersect(std::span<const PLComplex> cs, const std::optional<HSystem>& ambient = std::nullopt);

/** Pointwise: minimum attained at least twice. */
bool member(const TropicalPolynomial& f, const RatVector& u);
/** Pointwise: min over the support of m of l_j(u) attained at least twice (m = 0: always). */
bool member(const Polytope& p, const IntVector& m, const RatVector& u);

/** Witnesses of 0-dimensional cells not lying in any positive-dimensional cell. */
std::vector<RatVector> isolated_points(const PLComplex& c);

/**
 * Every cell of intersect({a, b}) through u has dimension at most
 * n - codim_a - codim_b, and one attains it. Throws if u is in no such cell.
 */
bool properly_at(const RatVector& u, const PLComplex& a, const PLComplex& b, int codim_a, int codim_b);

/** Same cells up to set equality of their systems. */
bool equivalent(const PLComplex& a, const PLComplex& b);

}  // namespace tropfiber
