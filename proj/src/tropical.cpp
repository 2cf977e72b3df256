#include "tropfiber/tropical.hpp"

#include <algorithm>
#include <tuple>

#include "tropfiber/error.hpp"

namespace tropfiber {

bool PLComplex::contains_point(const RatVector& u) const {
  return std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.system.satisfies(u); });
}

namespace {

bool cell_less(const Cell& a, const Cell& b) {
  return std::tie(a.dim, a.system.equalities, a.system.weak, a.system.strict, a.witness) <
         std::tie(b.dim, b.system.equalities, b.system.weak, b.system.strict, b.witness);
}

// inner is a subset of outer; the witness check is a cheap necessary condition.
bool cell_within(const Cell& outer, const Cell& inner) {
  if (inner.dim > outer.dim) return false;
  if (!outer.system.satisfies(inner.witness)) return false;
  return contains(outer.system, inner.system);
}

void check_ambient(const std::optional<HSystem>& ambient, std::size_t dim) {
  if (ambient && ambient->dim != dim) throw ParseError("ambient system of wrong dimension");
}

}  // namespace

std::vector<Cell> canonicalize(std::vector<Cell> cells, std::size_t dim) {
  std::vector<Cell> live;
  for (auto& c : cells) {
    if (c.system.dim != dim) throw ParseError("cell of wrong dimension");
    if (!feasible(c.system)) continue;
    c.system = remove_redundant(c.system);
    c.dim = affine_dim(c.system);
    c.witness = *relative_interior_point(c.system);
    live.push_back(std::move(c));
  }
  std::sort(live.begin(), live.end(), cell_less);
  // Largest cells first so that set-equal duplicates keep the smallest representative.
  std::vector<Cell> kept;
  for (std::size_t i = live.size(); i-- > 0;) {
    bool covered = false;
    for (const auto& k : kept)
      if (cell_within(k, live[i])) {
        covered = true;
        break;
      }
    if (covered) continue;
    // live[i] may also equal a smaller-ordered cell of the same dimension.
    for (std::size_t j = 0; j < i && !covered; ++j)
      if (live[j].dim == live[i].dim && cell_within(live[j], live[i]) && cell_within(live[i], live[j]))
        covered = true;
    if (!covered) kept.push_back(std::move(live[i]));
  }
  std::sort(kept.begin(), kept.end(), cell_less);
  return kept;
}

PLComplex trop_poly(const TropicalPolynomial& f, const std::optional<HSystem>& ambient) {
  const std::size_t n = f.dim();
  check_ambient(ambient, n);
  const auto& t = f.terms();
  std::vector<Cell> cells;
  for (std::size_t s = 0; s < t.size(); ++s)
    for (std::size_t r = s + 1; r < t.size(); ++r) {
      HSystem sys(n);
      // val_s + <u, e_s> = val_r + <u, e_r>
      IntVector diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = t[s].exponent[i] - t[r].exponent[i];
      sys.equalities.push_back({diff, t[r].valuation - t[s].valuation});
      // val_k + <u, e_k> >= val_s + <u, e_s>
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (k == s || k == r) continue;
        IntVector a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = t[k].exponent[i] - t[s].exponent[i];
        sys.weak.push_back({a, t[s].valuation - t[k].valuation});
      }
      if (ambient) sys = sys.conjoin(*ambient);
      cells.push_back({std::move(sys), -1, {}, {s, r}});
    }
  PLComplex out;
  out.dim = n;
  out.provenance = "trop_poly(" + std::to_string(t.size()) + " terms)";
  out.cells = canonicalize(std::move(cells), n);
  return out;
}

std::vector<std::size_t> support(const Polytope& p, const IntVector& m) {
  if (m.size() != p.dim) throw ParseError("direction of wrong dimension");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < p.facets.size(); ++j)
    if (dot(m, p.facets[j].normal) != 0) out.push_back(j);
  return out;
}

namespace {

TropicalPolynomial support_polynomial(const Polytope& p, const std::vector<std::size_t>& supp) {
  std::vector<TropicalTerm> terms;
  for (auto j : supp) terms.push_back({-p.facets[j].offset, p.facets[j].normal});
  return TropicalPolynomial(p.dim, std::move(terms));
}

}  // namespace

PLComplex trop_relative(const Polytope& p, const IntVector& m, const std::optional<HSystem>& ambient) {
  check_ambient(ambient, p.dim);
  const std::string prov = "trop_relative(m=" + to_string(m) + ")";
  if (is_zero(m)) {
    PLComplex out;
    out.dim = p.dim;
    out.provenance = prov;
    out.cells = canonicalize({Cell{ambient.value_or(HSystem(p.dim)), -1, {}, {}}}, p.dim);
    return out;
  }
  const auto supp = support(p, m);
  if (supp.empty()) throw DomainError("empty support for m=" + to_string(m));
  auto out = trop_poly(support_polynomial(p, supp), ambient);
  // Tags refer to facet indices rather than support positions.
  for (auto& c : out.cells)
    for (auto& k : c.tags) k = supp[k];
  out.provenance = prov;
  return out;
}

PLComplex log_derivative_trop(const Polytope& p, std::size_t i, const std::optional<HSystem>& ambient) {
  if (i >= p.dim) throw DomainError("coordinate index out of range");
  IntVector e(p.dim);
  e[i] = 1;
  auto out = trop_relative(p, e, ambient);
  out.provenance = "log_derivative_trop(i=" + std::to_string(i + 1) + ")";
  return out;
}

PLComplex intersect(std::span<const PLComplex> cs, const std::optional<HSystem>& ambient) {
  if (cs.empty()) throw DomainError("intersect needs at least one complex");
  const std::size_t n = cs.front().dim;
  for (const auto& c : cs)
    if (c.dim != n) throw ParseError("intersect: dimension mismatch");
  check_ambient(ambient, n);

  std::vector<Cell> current;
  for (const auto& c : cs.front().cells) {
    HSystem sys = ambient ? c.system.conjoin(*ambient) : c.system;
    current.push_back({std::move(sys), -1, {}, {}});
  }
  current = canonicalize(std::move(current), n);
  for (std::size_t k = 1; k < cs.size() && !current.empty(); ++k) {
    std::vector<Cell> next;
    for (const auto& a : current)
      for (const auto& b : cs[k].cells) next.push_back({a.system.conjoin(b.system), -1, {}, {}});
    current = canonicalize(std::move(next), n);
  }
  PLComplex out;
  out.dim = n;
  out.provenance = "intersect(";
  for (std::size_t k = 0; k < cs.size(); ++k) out.provenance += (k ? ", " : "") + cs[k].provenance;
  out.provenance += ")";
  out.cells = std::move(current);
  return out;
}

bool member(const TropicalPolynomial& f, const RatVector& u) { return f.minimizer_count(u) >= 2; }

bool member(const Polytope& p, const IntVector& m, const RatVector& u) {
  if (u.size() != p.dim) throw ParseError("point of wrong dimension");
  if (is_zero(m)) return true;
  const auto supp = support(p, m);
  if (supp.empty()) throw DomainError("empty support for m=" + to_string(m));
  return member(support_polynomial(p, supp), u);
}

std::vector<RatVector> isolated_points(const PLComplex& c) {
  std::vector<RatVector> out;
  for (const auto& cell : c.cells) {
    if (cell.dim != 0) continue;
    const bool inside = std::any_of(c.cells.begin(), c.cells.end(), [&](const Cell& other) {
      return other.dim > 0 && other.system.satisfies(cell.witness);
    });
    if (!inside) out.push_back(cell.witness);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool properly_at(const RatVector& u, const PLComplex& a, const PLComplex& b, int codim_a, int codim_b) {
  const std::vector<PLComplex> pair{a, b};
  const auto both = intersect(pair);
  const int expected = static_cast<int>(both.dim) - codim_a - codim_b;
  bool any = false, attained = false;
  for (const auto& cell : both.cells) {
    if (!cell.system.satisfies(u)) continue;
    any = true;
    if (cell.dim > expected) return false;
    if (cell.dim == expected) attained = true;
  }
  if (!any) throw DomainError("point " + to_string(u) + " is not in the intersection");
  return attained;
}

bool equivalent(const PLComplex& a, const PLComplex& b) {
  if (a.dim != b.dim) return false;
  auto covered = [](const PLComplex& x, const PLComplex& y) {
    return std::all_of(x.cells.begin(), x.cells.end(), [&](const Cell& c) {
      return std::any_of(y.cells.begin(), y.cells.end(), [&](const Cell& d) {
        return c.dim == d.dim && set_equal(c.system, d.system);
      });
    });
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace tropfiber
