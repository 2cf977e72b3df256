#include "tropfiber/ratlin.hpp"

#include <algorithm>
#include <utility>

#include "tropfiber/error.hpp"

namespace tropfiber {

namespace mp = boost::multiprecision;

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows, RatVector(cols)), cols_(cols) {}

RatMatrix::RatMatrix(std::vector<RatVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_)
    if (r.size() != cols_) throw ParseError("ragged matrix");
}

std::size_t RatMatrix::rank() const { return reduced_row_echelon(rows_, cols_).rows.size(); }

Echelon reduced_row_echelon(std::vector<RatVector> rows, std::size_t cols) {
  Echelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    const Rational inv = 1 / rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t k = col; k < rows[i].size(); ++k) rows[i][k] -= f * rows[pivot_row][k];
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  out.rows = std::move(rows);
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector clear_denominators(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = mp::lcm(den, mp::denominator(x));
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(mp::numerator(x) * (den / mp::denominator(x)));
  if (is_zero(out)) return out;
  return primitive(out);
}

Rational dot(const IntVector& a, const RatVector& u) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += a[i] * u[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& u) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * u[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = mp::gcd(g, mp::abs(x));
  if (g == 0) throw DomainError("not primitivizable: zero vector");
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x / g);
  return out;
}

IntVector sign_canonical(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

namespace {

template <class Vec>
std::vector<RatVector> as_rows(std::span<const Vec> vs) {
  std::vector<RatVector> rows;
  rows.reserve(vs.size());
  for (const auto& v : vs) {
    if (v.size() != vs.front().size()) throw ParseError("vectors of mixed dimension");
    if constexpr (std::is_same_v<Vec, IntVector>)
      rows.push_back(to_rational(v));
    else
      rows.push_back(v);
  }
  return rows;
}

}  // namespace

std::size_t rank(std::span<const IntVector> vs) {
  if (vs.empty()) return 0;
  return reduced_row_echelon(as_rows(vs), vs.front().size()).rows.size();
}

std::size_t rank(std::span<const RatVector> vs) {
  if (vs.empty()) return 0;
  return reduced_row_echelon(as_rows(vs), vs.front().size()).rows.size();
}

IntVector kernel_primitive(std::span<const IntVector> vs, std::size_t dim) {
  for (const auto& v : vs)
    if (v.size() != dim) throw ParseError("vectors of mixed dimension");
  const auto ech = reduced_row_echelon(vs.empty() ? std::vector<RatVector>{} : as_rows(vs), dim);
  if (ech.rows.size() + 1 != dim) throw DomainError("kernel not a line");
  // The single free column gets value 1; pivot variables are read off the RREF.
  std::size_t free_col = 0;
  for (std::size_t c = 0, p = 0; c < dim; ++c) {
    if (p < ech.pivots.size() && ech.pivots[p] == c) {
      ++p;
      continue;
    }
    free_col = c;
    break;
  }
  RatVector k(dim);
  k[free_col] = 1;
  for (std::size_t r = 0; r < ech.rows.size(); ++r) k[ech.pivots[r]] = -ech.rows[r][free_col];
  return sign_canonical(clear_denominators(k));
}

std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw ParseError("solve_square: shape mismatch");
  std::vector<RatVector> aug(n, RatVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  const auto ech = reduced_row_echelon(std::move(aug), n);
  if (ech.rows.size() < n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = ech.rows[i][n];
  return x;
}

RatVector coords_in_basis(const RatVector& v, std::span<const RatVector> basis) {
  const std::size_t n = v.size();
  if (basis.size() != n) throw DomainError("singular basis: wrong number of vectors");
  RatMatrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (basis[j].size() != n) throw ParseError("basis vector of wrong dimension");
    for (std::size_t i = 0; i < n; ++i) a(i, j) = basis[j][i];
  }
  auto x = solve_square(a, v);
  if (!x) throw DomainError("singular basis");
  return *x;
}

RatVector coords_in_basis(const IntVector& v, std::span<const RatVector> basis) {
  return coords_in_basis(to_rational(v), basis);
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw ParseError("malformed rational '" + std::string(whole) + "'");
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::pair<Rational, Rational> sqrt_bounds(const Rational& q, unsigned bits) {
  if (q < 0) throw DomainError("sqrt of negative rational");
  const Integer a = mp::numerator(q);
  const Integer b = mp::denominator(q);
  const Integer scale = Integer(1) << bits;
  // sqrt(a/b) = sqrt(a*b*scale^2) / (b*scale)
  const Integer root = mp::sqrt(Integer(a * b * scale * scale));
  const Integer den = b * scale;
  Rational lo(root, den);
  Rational hi = root * root == a * b * scale * scale ? lo : Rational(root + 1, den);
  return {lo, hi};
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace tropfiber
