#pragma once

#include <span>
#include <vector>

#include "tropfiber/ratlin.hpp"

namespace tropfiber::lp {

enum class Relation { Equal, GreaterEqual };

/** coeffs . x (= | >=) rhs */
struct Constraint {
  RatVector coeffs;
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  RatVector point;
};

/**
 * Maximizes objective . x over free variables x in Q^n subject to the
 * constraints. Exact two-phase dense simplex with Bland's rule; every call
 * owns its tableau.
 */
Result maximize(const RatVector& objective, std::span<const Constraint> constraints);

/** Same as maximize with the objective negated; value is the minimum. */
Result minimize(const RatVector& objective, std::span<const Constraint> constraints);

}  // namespace tropfiber::lp
