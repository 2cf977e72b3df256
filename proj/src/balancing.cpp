#include "tropfiber/balancing.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tropfiber/error.hpp"

namespace tropfiber {

namespace mp = boost::multiprecision;

std::vector<IntVector> primary_normals(const Polytope& p) {
  const std::size_t n = p.dim;
  const std::size_t m = p.facets.size();
  std::vector<IntVector> out;
  std::vector<IntVector> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() + 1 == n) {
      if (rank(pick) == n - 1) out.push_back(kernel_primitive(pick, n));
      return;
    }
    for (std::size_t j = start; j < m; ++j) {
      pick.push_back(p.facets[j].normal);
      rec(j + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PLComplex detect(const Polytope& p) {
  std::vector<PLComplex> cs;
  for (const auto& m : primary_normals(p)) cs.push_back(trop_relative(p, m));
  auto out = intersect(cs, interior(p));
  out.provenance = "detect";
  return out;
}

bool is_strongly_bulk_balanced(const Polytope& p, const RatVector& u) {
  if (!is_interior(p, u)) throw DomainError("not interior: " + to_string(u));
  for (const auto& m : primary_normals(p))
    if (!member(p, m, u)) return false;
  return true;
}

IntVector find_separating_primary_normal(const Polytope& p, const RatVector& u, const IntVector& m) {
  if (!is_interior(p, u)) throw DomainError("not interior: " + to_string(u));
  if (member(p, m, u)) throw DomainError("u is in Trop(P, m)");
  const std::size_t n = p.dim;
  const auto supp = support(p, m);
  std::size_t j1 = supp.front();
  for (auto j : supp)
    if (facet_value(p, j, u) < facet_value(p, j1, u)) j1 = j;

  std::vector<IntVector> w;
  for (std::size_t j = 0; j < p.facets.size(); ++j)
    if (dot(m, p.facets[j].normal) == 0) w.push_back(p.facets[j].normal);
  std::size_t r = rank(w);
  const auto& v1 = p.facets[j1].normal;
  auto avoids_v1 = [&](const std::vector<IntVector>& span) {
    auto with = span;
    with.push_back(v1);
    return rank(with) == rank(span) + 1;
  };
  for (auto j : supp) {
    if (r + 1 == n) break;
    if (j == j1) continue;
    w.push_back(p.facets[j].normal);
    const std::size_t r2 = rank(w);
    if (r2 > r && avoids_v1(w))
      r = r2;
    else
      w.pop_back();
  }
  if (r + 1 != n) throw DomainError("could not complete a primary subspace");
  return kernel_primitive(w, n);
}

AdaptedBasis adapted_basis(const Polytope& p, const RatVector& u, SlotOrder order) {
  AdaptedBasis b;
  b.filtration = energy_filtration(p, u);
  const auto& f = b.filtration;
  std::vector<IntVector> chosen;
  for (std::size_t l = 0; l < f.kappa; ++l) {
    auto group = f.groups[l];
    if (order == SlotOrder::Descending) std::reverse(group.begin(), group.end());
    std::size_t slot = 0;
    for (auto j : group) {
      chosen.push_back(p.facets[j].normal);
      if (rank(chosen) == chosen.size()) {
        b.flag.push_back(j);
        b.slots.emplace_back(l, slot++);
      } else {
        chosen.pop_back();
      }
    }
  }
  std::vector<RatVector> flag_vectors;
  for (const auto& v : chosen) flag_vectors.push_back(to_rational(v));
  // Smallest D making every lattice vector integral in the basis flag / D.
  Integer d = 1;
  for (std::size_t i = 0; i < p.dim; ++i) {
    IntVector e(p.dim);
    e[i] = 1;
    for (const auto& c : coords_in_basis(e, flag_vectors)) d = mp::lcm(d, mp::denominator(c));
  }
  b.scale = d;
  for (auto& v : flag_vectors) {
    for (auto& x : v) x /= d;
    b.vectors.push_back(std::move(v));
  }
  return b;
}

namespace {

IntVector integral_coords(const IntVector& v, const AdaptedBasis& b) {
  IntVector out;
  for (const auto& c : coords_in_basis(v, b.vectors)) {
    if (mp::denominator(c) != 1) throw DomainError("normal not integral in adapted basis");
    out.push_back(mp::numerator(c));
  }
  return out;
}

void sort_terms(LaurentPolynomial& f) {
  std::sort(f.begin(), f.end(), [](const LaurentTerm& a, const LaurentTerm& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.unit < b.unit;
  });
}

}  // namespace

LaurentSystem leading_term_system(const Polytope& p, const RatVector& u, const AdaptedBasis& basis,
                                  bool generalized) {
  if (basis.filtration.point != u) throw DomainError("adapted basis was built for a different point");
  const auto& f = basis.filtration;
  LaurentSystem sys;
  sys.basis = basis;
  sys.generalized = generalized;
  for (std::size_t l = 0; l < f.kappa; ++l) {
    LaurentPolynomial level;
    for (std::size_t a = 0; a < f.groups[l].size(); ++a) {
      LaurentTerm t;
      t.exponent = integral_coords(p.facets[f.groups[l][a]].normal, basis);
      if (generalized) t.unit = std::make_pair(l, a);
      level.push_back(std::move(t));
    }
    sort_terms(level);
    sys.levels.push_back(std::move(level));
  }
  for (std::size_t k = 0; k < basis.slots.size(); ++k) {
    const std::size_t l = basis.slots[k].first;
    LaurentPolynomial eq;
    for (const auto& t : sys.levels[l]) {
      if (t.exponent[k] == 0) continue;
      LaurentTerm d = t;
      d.coeff *= t.exponent[k];
      eq.push_back(std::move(d));
    }
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

std::string format_polynomial(const LaurentPolynomial& f, const AdaptedBasis& basis) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& t = f[i];
    Integer c = t.coeff;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = mp::abs(c);
    std::vector<std::string> factors;
    if (c != 1) factors.push_back(c.str());
    if (t.unit)
      factors.push_back("c_{" + std::to_string(t.unit->first + 1) + "," + std::to_string(t.unit->second + 1) + "}");
    for (std::size_t k = 0; k < t.exponent.size(); ++k) {
      if (t.exponent[k] == 0) continue;
      std::string y = "y_{" + std::to_string(basis.slots[k].first + 1) + "," +
                      std::to_string(basis.slots[k].second + 1) + "}";
      if (t.exponent[k] != 1) y += "^{" + t.exponent[k].str() + "}";
      factors.push_back(std::move(y));
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? " " : "") + factors[k];
  }
  return out;
}

bool solvable_over_torus(const Polytope& p, const RatVector& u, SlotOrder order) {
  const auto basis = adapted_basis(p, u, order);
  const auto& f = basis.filtration;
  for (std::size_t k = 0; k < basis.slots.size(); ++k) {
    const std::size_t l = basis.slots[k].first;
    bool survives = false;
    for (auto j : f.groups[l]) {
      if (std::find(basis.flag.begin(), basis.flag.end(), j) != basis.flag.end()) continue;
      if (integral_coords(p.facets[j].normal, basis)[k] != 0) {
        survives = true;
        break;
      }
    }
    if (!survives) return false;
  }
  return true;
}

std::vector<RatVector> balanced_candidates(const Polytope& p) {
  std::vector<PLComplex> cs;
  for (std::size_t i = 0; i < p.dim; ++i) cs.push_back(log_derivative_trop(p, i));
  return isolated_points(intersect(cs, interior(p)));
}

}  // namespace tropfiber
