#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropfiber/lp.hpp"
#include "tropfiber/ratlin.hpp"

namespace tropfiber {

/** A single linear row <coeffs, u> (relation) rhs. */
struct LinearRow {
  IntVector coeffs;
  Rational rhs;

  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

bool operator<(const LinearRow& a, const LinearRow& b);

/**
 * Conjunction of rational linear equalities, non-strict and strict
 * inequalities in Q^dim. Strict rows are first-class: they carry the
 * interior restrictions.
 */
struct HSystem {
  std::size_t dim = 0;
  std::vector<LinearRow> equalities;  ///< <a,u> = b
  std::vector<LinearRow> weak;        ///< <a,u> >= b
  std::vector<LinearRow> strict;      ///< <a,u> >  b

  HSystem() = default;
  explicit HSystem(std::size_t d) : dim(d) {}

  bool satisfies(const RatVector& u) const;
  /** Membership in the closure (strict rows relaxed to weak). */
  bool closure_satisfies(const RatVector& u) const;
  /** Conjunction of both systems' rows. */
  HSystem conjoin(const HSystem& other) const;
  std::size_t row_count() const { return equalities.size() + weak.size() + strict.size(); }

  friend bool operator==(const HSystem&, const HSystem&) = default;
};

/** Witness point satisfying every row (strict rows strictly), or nullopt. */
std::optional<RatVector> feasible(const HSystem& s);

/**
 * Point in the relative interior of the solution set: every row that is not
 * an implicit equality holds strictly. nullopt when infeasible.
 */
std::optional<RatVector> relative_interior_point(const HSystem& s);

/** Dimension of the affine hull of the solution set; -1 when empty. */
int affine_dim(const HSystem& s);

/**
 * Minimal equivalent system. Implicit equalities are promoted, equalities are
 * brought to reduced echelon form, every row is scaled to a primitive integer
 * normal, and rows are sorted lexicographically. Throws DomainError when s is
 * infeasible.
 */
HSystem remove_redundant(const HSystem& s);

/** Extreme points of the (closure of the) solution set; dim <= 3 and bounded. */
std::vector<RatVector> vertices(const HSystem& s);

/** inner is a subset of outer (as point sets). An empty inner is contained in anything. */
bool contains(const HSystem& outer, const HSystem& inner);

bool set_equal(const HSystem& a, const HSystem& b);

/** Minimum of <objective, u> over the closure of s. */
lp::Result minimize_over(const RatVector& objective, const HSystem& s);
lp::Result maximize_over(const RatVector& objective, const HSystem& s);

/** Bounded iff every coordinate has finite min and max over the closure. */
bool is_bounded(const HSystem& s);

/** Divides a row by the positive gcd of its coefficients. */
LinearRow normalized(LinearRow row);

}  // namespace tropfiber
