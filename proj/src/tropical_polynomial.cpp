#include "tropfiber/tropical_polynomial.hpp"

#include "tropfiber/error.hpp"

namespace tropfiber {

TropicalPolynomial::TropicalPolynomial(std::size_t dim, std::vector<TropicalTerm> terms) : dim_(dim) {
  if (terms.empty()) throw DomainError("tropical polynomial needs at least one term");
  for (auto& t : terms) {
    if (t.exponent.size() != dim) throw ParseError("term exponent of wrong dimension");
    bool merged = false;
    for (auto& kept : terms_)
      if (kept.exponent == t.exponent) {
        if (t.valuation < kept.valuation) kept.valuation = t.valuation;
        merged = true;
        break;
      }
    if (!merged) terms_.push_back(std::move(t));
  }
}

Rational TropicalPolynomial::term_value(std::size_t k, const RatVector& u) const {
  if (u.size() != dim_) throw ParseError("point of wrong dimension");
  return terms_.at(k).valuation + dot(terms_[k].exponent, u);
}

Rational TropicalPolynomial::evaluate(const RatVector& u) const {
  Rational best = term_value(0, u);
  for (std::size_t k = 1; k < terms_.size(); ++k) {
    Rational v = term_value(k, u);
    if (v < best) best = std::move(v);
  }
  return best;
}

std::size_t TropicalPolynomial::minimizer_count(const RatVector& u) const {
  const Rational best = evaluate(u);
  std::size_t count = 0;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (term_value(k, u) == best) ++count;
  return count;
}

}  // namespace tropfiber
