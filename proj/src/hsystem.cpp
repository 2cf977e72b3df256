#include "tropfiber/hsystem.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tropfiber/error.hpp"

namespace tropfiber {

namespace mp = boost::multiprecision;

bool operator<(const LinearRow& a, const LinearRow& b) {
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  return a.rhs < b.rhs;
}

LinearRow normalized(LinearRow row) {
  Integer g = 0;
  for (const auto& x : row.coeffs) g = mp::gcd(g, mp::abs(x));
  if (g > 1) {
    for (auto& x : row.coeffs) x /= g;
    row.rhs /= g;
  }
  return row;
}

bool HSystem::satisfies(const RatVector& u) const {
  for (const auto& r : equalities)
    if (dot(r.coeffs, u) != r.rhs) return false;
  for (const auto& r : weak)
    if (dot(r.coeffs, u) < r.rhs) return false;
  for (const auto& r : strict)
    if (dot(r.coeffs, u) <= r.rhs) return false;
  return true;
}

bool HSystem::closure_satisfies(const RatVector& u) const {
  for (const auto& r : equalities)
    if (dot(r.coeffs, u) != r.rhs) return false;
  for (const auto& r : weak)
    if (dot(r.coeffs, u) < r.rhs) return false;
  for (const auto& r : strict)
    if (dot(r.coeffs, u) < r.rhs) return false;
  return true;
}

HSystem HSystem::conjoin(const HSystem& other) const {
  if (other.dim != dim) throw ParseError("conjoin: dimension mismatch");
  HSystem out = *this;
  out.equalities.insert(out.equalities.end(), other.equalities.begin(), other.equalities.end());
  out.weak.insert(out.weak.end(), other.weak.begin(), other.weak.end());
  out.strict.insert(out.strict.end(), other.strict.begin(), other.strict.end());
  return out;
}

namespace {

// Builds LP constraints over (u, extra...) where `extra` slack variables are
// appended after the dim coordinates.
struct LpBuilder {
  std::size_t dim;
  std::size_t extra;
  std::vector<lp::Constraint> rows;

  RatVector widen(const IntVector& a) const {
    RatVector c(dim + extra);
    for (std::size_t i = 0; i < dim; ++i) c[i] = a[i];
    return c;
  }
  void eq(const LinearRow& r) { rows.push_back({widen(r.coeffs), lp::Relation::Equal, r.rhs}); }
  void ge(const LinearRow& r) { rows.push_back({widen(r.coeffs), lp::Relation::GreaterEqual, r.rhs}); }
  // <a,u> - t_k >= b
  void ge_with_slack(const LinearRow& r, std::size_t k) {
    auto c = widen(r.coeffs);
    c[dim + k] = -1;
    rows.push_back({std::move(c), lp::Relation::GreaterEqual, r.rhs});
  }
  // lo <= t_k <= hi
  void bound_extra(std::size_t k, const Rational& lo, const Rational& hi) {
    RatVector c(dim + extra);
    c[dim + k] = 1;
    rows.push_back({c, lp::Relation::GreaterEqual, lo});
    c[dim + k] = -1;
    rows.push_back({c, lp::Relation::GreaterEqual, -hi});
  }
};

RatVector truncate(RatVector v, std::size_t dim) {
  v.resize(dim);
  return v;
}

void check_dims(const HSystem& s) {
  for (const auto* rows : {&s.equalities, &s.weak, &s.strict})
    for (const auto& r : *rows)
      if (r.coeffs.size() != s.dim) throw ParseError("HSystem row of wrong dimension");
}

// All inequality rows of the closure: weak rows first, then strict rows.
std::vector<LinearRow> closure_inequalities(const HSystem& s) {
  std::vector<LinearRow> rows = s.weak;
  rows.insert(rows.end(), s.strict.begin(), s.strict.end());
  return rows;
}

// Indices (into closure_inequalities) of rows that hold with equality on the
// whole closure. Assumes the closure is nonempty.
std::vector<std::size_t> implicit_equalities(const HSystem& s) {
  const auto ineq = closure_inequalities(s);
  std::vector<std::size_t> candidates(ineq.size());
  std::iota(candidates.begin(), candidates.end(), 0);
  while (!candidates.empty()) {
    LpBuilder b{s.dim, candidates.size(), {}};
    for (const auto& r : s.equalities) b.eq(r);
    std::vector<bool> is_candidate(ineq.size(), false);
    for (auto c : candidates) is_candidate[c] = true;
    for (std::size_t i = 0; i < ineq.size(); ++i)
      if (!is_candidate[i]) b.ge(ineq[i]);
    RatVector objective(s.dim + candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      b.ge_with_slack(ineq[candidates[k]], k);
      b.bound_extra(k, 0, 1);
      objective[s.dim + k] = 1;
    }
    const auto res = lp::maximize(objective, b.rows);
    if (res.status != lp::Status::Optimal) return candidates;
    if (res.value == 0) return candidates;
    std::vector<std::size_t> still;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (res.point[s.dim + k] == 0) still.push_back(candidates[k]);
    candidates = std::move(still);
  }
  return candidates;
}

}  // namespace

std::optional<RatVector> feasible(const HSystem& s) {
  check_dims(s);
  if (s.strict.empty()) {
    LpBuilder b{s.dim, 0, {}};
    for (const auto& r : s.equalities) b.eq(r);
    for (const auto& r : s.weak) b.ge(r);
    const auto res = lp::maximize(RatVector(s.dim), b.rows);
    if (res.status == lp::Status::Infeasible) return std::nullopt;
    return res.point;
  }
  LpBuilder b{s.dim, 1, {}};
  for (const auto& r : s.equalities) b.eq(r);
  for (const auto& r : s.weak) b.ge(r);
  for (const auto& r : s.strict) b.ge_with_slack(r, 0);
  b.bound_extra(0, -1, 1);
  RatVector objective(s.dim + 1);
  objective[s.dim] = 1;
  const auto res = lp::maximize(objective, b.rows);
  if (res.status != lp::Status::Optimal || res.value <= 0) return std::nullopt;
  return truncate(res.point, s.dim);
}

std::optional<RatVector> relative_interior_point(const HSystem& s) {
  if (!feasible(s)) return std::nullopt;
  const auto ineq = closure_inequalities(s);
  const auto implicit = implicit_equalities(s);
  std::vector<bool> is_implicit(ineq.size(), false);
  for (auto i : implicit) is_implicit[i] = true;
  LpBuilder b{s.dim, 1, {}};
  for (const auto& r : s.equalities) b.eq(r);
  for (std::size_t i = 0; i < ineq.size(); ++i) {
    if (is_implicit[i])
      b.eq(ineq[i]);
    else
      b.ge_with_slack(ineq[i], 0);
  }
  b.bound_extra(0, -1, 1);
  RatVector objective(s.dim + 1);
  objective[s.dim] = 1;
  const auto res = lp::maximize(objective, b.rows);
  if (res.status != lp::Status::Optimal) return std::nullopt;
  return truncate(res.point, s.dim);
}

int affine_dim(const HSystem& s) {
  if (!feasible(s)) return -1;
  const auto ineq = closure_inequalities(s);
  std::vector<IntVector> normals;
  for (const auto& r : s.equalities) normals.push_back(r.coeffs);
  for (auto i : implicit_equalities(s)) normals.push_back(ineq[i].coeffs);
  return static_cast<int>(s.dim) - static_cast<int>(rank(normals));
}

lp::Result minimize_over(const RatVector& objective, const HSystem& s) {
  check_dims(s);
  LpBuilder b{s.dim, 0, {}};
  for (const auto& r : s.equalities) b.eq(r);
  for (const auto& r : s.weak) b.ge(r);
  for (const auto& r : s.strict) b.ge(r);
  return lp::minimize(objective, b.rows);
}

lp::Result maximize_over(const RatVector& objective, const HSystem& s) {
  check_dims(s);
  LpBuilder b{s.dim, 0, {}};
  for (const auto& r : s.equalities) b.eq(r);
  for (const auto& r : s.weak) b.ge(r);
  for (const auto& r : s.strict) b.ge(r);
  return lp::maximize(objective, b.rows);
}

namespace {

struct RatRow {
  RatVector coeffs;
  Rational rhs;
};

LinearRow to_primitive_row(const RatRow& r) {
  Integer den = 1;
  for (const auto& x : r.coeffs) den = mp::lcm(den, mp::denominator(x));
  IntVector a;
  a.reserve(r.coeffs.size());
  for (const auto& x : r.coeffs) a.push_back(mp::numerator(x) * (den / mp::denominator(x)));
  return normalized({std::move(a), r.rhs * den});
}

// Reduces an inequality row modulo the echelon equalities (eliminating pivot columns).
RatRow reduce(RatRow row, const std::vector<RatRow>& echelon, const std::vector<std::size_t>& pivots) {
  for (std::size_t k = 0; k < echelon.size(); ++k) {
    const Rational f = row.coeffs[pivots[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) row.coeffs[j] -= f * echelon[k].coeffs[j];
    row.rhs -= f * echelon[k].rhs;
  }
  return row;
}

RatVector row_objective(const LinearRow& r) { return to_rational(r.coeffs); }

HSystem without(const HSystem& s, bool strict_class, std::size_t index) {
  HSystem out = s;
  auto& rows = strict_class ? out.strict : out.weak;
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

}  // namespace

HSystem remove_redundant(const HSystem& s) {
  if (!feasible(s)) throw DomainError("remove_redundant: infeasible system");
  const std::size_t n = s.dim;
  const auto implicit = implicit_equalities(s);
  std::vector<bool> is_implicit(s.weak.size(), false);
  for (auto i : implicit)
    if (i < s.weak.size()) is_implicit[i] = true;

  // Equalities: echelon form of [a | b].
  std::vector<RatVector> aug;
  auto push_aug = [&](const LinearRow& r) {
    RatVector v = to_rational(r.coeffs);
    v.push_back(r.rhs);
    aug.push_back(std::move(v));
  };
  for (const auto& r : s.equalities) push_aug(r);
  for (std::size_t i = 0; i < s.weak.size(); ++i)
    if (is_implicit[i]) push_aug(s.weak[i]);
  const auto ech = reduced_row_echelon(std::move(aug), n);
  std::vector<RatRow> echelon;
  for (const auto& row : ech.rows) {
    RatRow r{RatVector(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n)), row[n]};
    echelon.push_back(std::move(r));
  }

  HSystem out(n);
  for (const auto& r : echelon) out.equalities.push_back(to_primitive_row(r));

  auto reduce_rows = [&](const std::vector<LinearRow>& rows, const std::vector<bool>* skip) {
    std::vector<LinearRow> kept;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (skip && (*skip)[i]) continue;
      auto red = reduce({to_rational(rows[i].coeffs), rows[i].rhs}, echelon, ech.pivots);
      // Constant rows hold on the (nonempty) set.
      if (is_zero(red.coeffs)) continue;
      kept.push_back(to_primitive_row(red));
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return kept;
  };
  out.weak = reduce_rows(s.weak, &is_implicit);
  out.strict = reduce_rows(s.strict, nullptr);

  // A strict row sharing a hyperplane with a weak row subsumes it.
  std::erase_if(out.weak, [&](const LinearRow& w) {
    return std::find(out.strict.begin(), out.strict.end(), w) != out.strict.end();
  });

  // LP redundancy, sequentially against the rows still kept.
  for (std::size_t i = 0; i < out.weak.size();) {
    const auto others = without(out, false, i);
    const auto res = minimize_over(row_objective(out.weak[i]), others);
    if (res.status == lp::Status::Optimal && res.value >= out.weak[i].rhs)
      out.weak.erase(out.weak.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  for (std::size_t i = 0; i < out.strict.size();) {
    const auto others = without(out, true, i);
    const auto res = minimize_over(row_objective(out.strict[i]), others);
    bool redundant = false;
    if (res.status == lp::Status::Optimal) {
      if (res.value > out.strict[i].rhs) {
        redundant = true;
      } else if (res.value == out.strict[i].rhs) {
        HSystem touch = others;
        touch.equalities.push_back(out.strict[i]);
        redundant = !feasible(touch).has_value();
      }
    }
    if (redundant)
      out.strict.erase(out.strict.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return out;
}

bool is_bounded(const HSystem& s) {
  for (std::size_t i = 0; i < s.dim; ++i) {
    RatVector e(s.dim);
    e[i] = 1;
    const auto lo = minimize_over(e, s);
    if (lo.status == lp::Status::Infeasible) return true;
    if (lo.status == lp::Status::Unbounded) return false;
    if (maximize_over(e, s).status == lp::Status::Unbounded) return false;
  }
  return true;
}

std::vector<RatVector> vertices(const HSystem& s) {
  const std::size_t n = s.dim;
  if (n == 0 || n > 3) throw DomainError("vertices: only dimensions 1 to 3 are supported");
  check_dims(s);
  if (!is_bounded(s)) throw DomainError("vertices: unbounded solution set");
  std::vector<LinearRow> planes = s.equalities;
  planes.insert(planes.end(), s.weak.begin(), s.weak.end());
  planes.insert(planes.end(), s.strict.begin(), s.strict.end());
  std::vector<RatVector> out;
  std::vector<std::size_t> pick(n);
  // Enumerate n-subsets in lexicographic order.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      RatMatrix a(n, n);
      RatVector b(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = planes[pick[i]].coeffs[j];
        b[i] = planes[pick[i]].rhs;
      }
      if (auto x = solve_square(a, b); x && s.closure_satisfies(*x)) out.push_back(std::move(*x));
      return;
    }
    for (std::size_t k = start; k < planes.size(); ++k) {
      pick[depth] = k;
      rec(k + 1, depth + 1);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const HSystem& outer, const HSystem& inner) {
  if (outer.dim != inner.dim) throw ParseError("contains: dimension mismatch");
  if (!feasible(inner)) return true;
  for (const auto& r : outer.equalities) {
    const auto obj = row_objective(r);
    const auto lo = minimize_over(obj, inner);
    if (lo.status != lp::Status::Optimal || lo.value != r.rhs) return false;
    const auto hi = maximize_over(obj, inner);
    if (hi.status != lp::Status::Optimal || hi.value != r.rhs) return false;
  }
  for (const auto& r : outer.weak) {
    const auto lo = minimize_over(row_objective(r), inner);
    if (lo.status != lp::Status::Optimal || lo.value < r.rhs) return false;
  }
  for (const auto& r : outer.strict) {
    const auto lo = minimize_over(row_objective(r), inner);
    if (lo.status != lp::Status::Optimal || lo.value < r.rhs) return false;
    if (lo.value == r.rhs) {
      HSystem touch = inner;
      touch.equalities.push_back(r);
      if (feasible(touch)) return false;
    }
  }
  return true;
}

bool set_equal(const HSystem& a, const HSystem& b) { return contains(a, b) && contains(b, a); }

}  // namespace tropfiber
