#pragma once

#include <cstddef>
#include <vector>

#include "tropfiber/ratlin.hpp"

namespace tropfiber {

struct TropicalTerm {
  Rational valuation;
  IntVector exponent;

  friend bool operator==(const TropicalTerm&, const TropicalTerm&) = default;
};

/**
 * min over terms of (valuation + <u, exponent>). Duplicate exponents are
 * merged keeping the smaller valuation; term order is first occurrence.
 */
class TropicalPolynomial {
 public:
  TropicalPolynomial(std::size_t dim, std::vector<TropicalTerm> terms);

  std::size_t dim() const { return dim_; }
  const std::vector<TropicalTerm>& terms() const { return terms_; }

  Rational term_value(std::size_t k, const RatVector& u) const;
  Rational evaluate(const RatVector& u) const;
  /** Number of terms attaining the minimum at u. */
  std::size_t minimizer_count(const RatVector& u) const;

 private:
  std::size_t dim_;
  std::vector<TropicalTerm> terms_;
};

}  // namespace tropfiber
