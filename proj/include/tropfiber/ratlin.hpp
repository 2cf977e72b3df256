#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tropfiber {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/** Integer lattice vector: facet normals, directions m, exponents. */
using IntVector = std::vector<Integer>;
/** Point or covector with exact rational coordinates. */
using RatVector = std::vector<Rational>;

/**
 * Dense rational matrix stored by rows. Only used for the small basis-change
 * and elimination problems that show up here (n is at most a handful).
 */
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(std::vector<RatVector> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const RatVector& row(std::size_t i) const { return rows_[i]; }

  std::size_t rank() const;

 private:
  std::vector<RatVector> rows_;
  std::size_t cols_ = 0;
};

/** Result of Gauss-Jordan elimination: nonzero rows of the RREF plus pivot columns. */
struct Echelon {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
};

Echelon reduced_row_echelon(std::vector<RatVector> rows, std::size_t cols);

RatVector to_rational(const IntVector& v);

/** Scales a rational vector by a positive factor so that it becomes a primitive integer vector. */
IntVector clear_denominators(const RatVector& v);

Rational dot(const IntVector& a, const RatVector& u);
Rational dot(const RatVector& a, const RatVector& u);
Integer dot(const IntVector& a, const IntVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

/** v divided by the gcd of its entries. Throws DomainError on the zero vector. */
IntVector primitive(const IntVector& v);

/** Negates v if needed so that its first nonzero entry is positive. */
IntVector sign_canonical(IntVector v);

/** Rank over Q. Throws ParseError if the vectors do not share a dimension. */
std::size_t rank(std::span<const IntVector> vs);
std::size_t rank(std::span<const RatVector> vs);

/**
 * Primitive integer vector spanning the orthogonal complement of span(vs) in
 * Q^dim, sign-canonical. Requires rank(vs) == dim - 1.
 */
IntVector kernel_primitive(std::span<const IntVector> vs, std::size_t dim);

/** Coordinates of v in a rational basis of the ambient space. */
RatVector coords_in_basis(const RatVector& v, std::span<const RatVector> basis);
RatVector coords_in_basis(const IntVector& v, std::span<const RatVector> basis);

/** Unique solution of the square system A x = b, or nullopt if A is singular. */
std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b);

/** Parses "p/q", "p", or "-p/q". Throws ParseError. */
Rational parse_rational(std::string_view text);
/** "p/q", or "p" when the denominator is 1. */
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const RatVector& v);
std::string to_string(const IntVector& v);

/** Lower and upper rational bounds on sqrt(q) (q >= 0) with width at most 2^-bits. */
std::pair<Rational, Rational> sqrt_bounds(const Rational& q, unsigned bits);

double to_double(const Rational& q);

}  // namespace tropfiber
