#include "tropfiber/lp.hpp"

#include <limits>

#include "tropfiber/error.hpp"

namespace tropfiber::lp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau over x >= 0 with rows T[i] . x = T[i][cols]. Column layout:
// [p_0 q_0 ... p_{n-1} q_{n-1} | surplus | artificial], free variables split
// as x_i = p_i - q_i.
class Tableau {
 public:
  Tableau(std::size_t n, std::span<const Constraint> cons) : n_(n) {
    std::size_t surplus = 0;
    for (const auto& c : cons)
      if (c.relation == Relation::GreaterEqual) ++surplus;
    const std::size_t m = cons.size();
    first_surplus_ = 2 * n;
    first_artificial_ = first_surplus_ + surplus;
    cols_ = first_artificial_ + m;
    rows_.assign(m, RatVector(cols_ + 1));
    basis_.assign(m, kNone);
    std::size_t s = first_surplus_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = cons[i];
      if (c.coeffs.size() != n) throw ParseError("lp: constraint dimension mismatch");
      auto& row = rows_[i];
      for (std::size_t j = 0; j < n; ++j) {
        row[2 * j] = c.coeffs[j];
        row[2 * j + 1] = -c.coeffs[j];
      }
      if (c.relation == Relation::GreaterEqual) row[s++] = -1;
      row[cols_] = c.rhs;
      if (row[cols_] < 0)
        for (auto& x : row) x = -x;
      row[first_artificial_ + i] = 1;
      basis_[i] = first_artificial_ + i;
    }
  }

  // Phase 1: drive artificials to zero. Returns false if infeasible.
  bool phase_one() {
    RatVector cost(cols_);
    for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = -1;
    set_objective(cost);
    run(cols_);
    if (objective_[cols_] < 0) return false;
    purge_artificials();
    return true;
  }

  // Phase 2 on the original variables. Returns false if unbounded.
  bool phase_two(const RatVector& objective) {
    RatVector cost(cols_);
    for (std::size_t j = 0; j < n_; ++j) {
      cost[2 * j] = objective[j];
      cost[2 * j + 1] = -objective[j];
    }
    set_objective(cost);
    return run(first_artificial_);
  }

  Rational value() const { return objective_[cols_]; }

  RatVector point() const {
    RatVector x(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t b = basis_[i];
      if (b < 2 * n_) {
        if (b % 2 == 0)
          x[b / 2] += rows_[i][cols_];
        else
          x[b / 2] -= rows_[i][cols_];
      }
    }
    return x;
  }

 private:
  void set_objective(const RatVector& cost) {
    objective_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) objective_[j] = -cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = objective_[basis_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (rows_[i][j] != 0) objective_[j] -= f * rows_[i][j];
    }
  }

  // Bland's rule iterations; only columns below `limit` may enter.
  bool run(std::size_t limit) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < limit; ++j)
        if (objective_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    for (auto& x : prow)
      if (x != 0) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (prow[j] != 0) rows_[i][j] -= f * prow[j];
    }
    if (objective_[c] != 0) {
      const Rational f = objective_[c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (prow[j] != 0) objective_[j] -= f * prow[j];
    }
    basis_[r] = c;
  }

  // After a feasible phase 1, artificials still basic sit at zero; pivot them
  // out or drop their (linearly dependent) rows.
  void purge_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_artificial_; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col != kNone) {
        pivot(i, col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t n_;
  std::size_t cols_ = 0;
  std::size_t first_surplus_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> basis_;
  RatVector objective_;
};

}  // namespace

Result maximize(const RatVector& objective, std::span<const Constraint> constraints) {
  Tableau t(objective.size(), constraints);
  Result res;
  if (!t.phase_one()) {
    res.status = Status::Infeasible;
    return res;
  }
  if (!t.phase_two(objective)) {
    res.status = Status::Unbounded;
    res.point = t.point();
    return res;
  }
  res.status = Status::Optimal;
  res.value = t.value();
  res.point = t.point();
  return res;
}

Result minimize(const RatVector& objective, std::span<const Constraint> constraints) {
  RatVector neg(objective.size());
  for (std::size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
  auto res = maximize(neg, constraints);
  res.value = -res.value;
  return res;
}

}  // namespace tropfiber::lp
