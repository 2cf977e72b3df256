#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropfiber/polytope.hpp"
#include "tropfiber/tropical.hpp"

namespace tropfiber {

struct DistanceInterval {
  Rational lower;
  Rational upper;
};

struct Box {
  Rational xmin, xmax, ymin, ymax;

  HSystem system() const;
};

/** Convex planar piece: 1 point, 2 segment endpoints, or a counterclockwise polygon. */
using Piece = std::vector<RatVector>;

struct PlanarSet {
  std::vector<Piece> pieces;
};

Box bounding_box(const Polytope& p, const Rational& inflate = 0);

PlanarSet planar_set(const Polytope& p);
/** Cells clipped to box; throws DomainError on an unbounded cell without a box. */
PlanarSet planar_set(const PLComplex& c, const std::optional<Box>& box = std::nullopt);

/** Squared Euclidean distance from a point to a convex piece. */
Rational squared_distance(const RatVector& p, const Piece& piece);

/** Interval of width at most tol around sup_{a in A} d(a, B). */
DistanceInterval directed_hausdorff(const PlanarSet& a, const PlanarSet& b, const Rational& tol);

DistanceInterval hausdorff(const PlanarSet& a, const PlanarSet& b, const Rational& tol);
DistanceInterval hausdorff(const Polytope& a, const Polytope& b, const Rational& tol);
DistanceInterval hausdorff(const PLComplex& a, const PLComplex& b, const Rational& tol,
                           const std::optional<Box>& box = std::nullopt);

struct ConvergenceRow {
  Rational delta;
  DistanceInterval distance;
  /** The translate satisfies every polytope invariant (irredundant facets included). */
  bool valid_translate = true;
};

/**
 * For each delta, Hausdorff distance between trop_relative of the translated
 * polytope and of the base, both clipped to the base bounding box inflated by 1.
 * The tropicalization only needs the shifted H-description, so large deltas
 * that make a facet redundant still produce a row, flagged invalid.
 */
std::vector<ConvergenceRow> convergence_experiment(const Polytope& base, std::size_t facet,
                                                   const std::vector<Rational>& deltas, const IntVector& m,
                                                   const Rational& tol);

}  // namespace tropfiber
