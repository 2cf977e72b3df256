#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropfiber/polytope.hpp"
#include "tropfiber/tropical.hpp"

namespace tropfiber {

/** Sign-canonical primitive normals of the codimension-1 subspaces spanned by facet normals, sorted. */
std::vector<IntVector> primary_normals(const Polytope& p);

/** Intersection of trop_relative over all primary normals, inside Int(P). */
PLComplex detect(const Polytope& p);

bool is_strongly_bulk_balanced(const Polytope& p, const RatVector& u);

/** A primary normal whose tropicalization misses u, given a direction m that already misses it. */
IntVector find_separating_primary_normal(const Polytope& p, const RatVector& u, const IntVector& m);

enum class SlotOrder { Ascending, Descending };

struct AdaptedBasis {
  /** e*_{l,s}, flattened level by level. */
  std::vector<RatVector> vectors;
  /** Facet (0-based) realizing each slot, same flattening. */
  std::vector<std::size_t> flag;
  /** (level, slot), both 0-based, for each flattened position. */
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  Integer scale = 1;
  EnergyFiltration filtration;
};

AdaptedBasis adapted_basis(const Polytope& p, const RatVector& u, SlotOrder order = SlotOrder::Ascending);

struct LaurentTerm {
  Integer coeff = 1;
  IntVector exponent;  ///< over the flattened y_{r,s}
  /** Symbolic unit c_{(l,a)} (0-based level and position in group), generalized mode only. */
  std::optional<std::pair<std::size_t, std::size_t>> unit;
};

using LaurentPolynomial = std::vector<LaurentTerm>;

struct LaurentSystem {
  AdaptedBasis basis;
  bool generalized = false;
  /** (PO)_l for levels l < kappa. */
  std::vector<LaurentPolynomial> levels;
  /** y_{l,s} d(PO)_l / dy_{l,s}, per flattened slot. */
  std::vector<LaurentPolynomial> equations;
};

LaurentSystem leading_term_system(const Polytope& p, const RatVector& u, const AdaptedBasis& basis,
                                  bool generalized);

/** "y_{1,1} - y_{1,1}^-1 = 0"-style rendering, terms sorted by exponent. */
std::string format_polynomial(const LaurentPolynomial& f, const AdaptedBasis& basis);

/** Each slot's log-derivative of the non-flag part of its level is not identically zero. */
bool solvable_over_torus(const Polytope& p, const RatVector& u, SlotOrder order = SlotOrder::Ascending);

std::vector<RatVector> balanced_candidates(const Polytope& p);

}  // namespace tropfiber
