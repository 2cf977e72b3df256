#include "tropfiber/metrics.hpp"

#include <algorithm>
#include <queue>

#include "tropfiber/error.hpp"

namespace tropfiber {

namespace {

RatVector sub(const RatVector& a, const RatVector& b) { return {a[0] - b[0], a[1] - b[1]}; }
Rational cross(const RatVector& a, const RatVector& b) { return a[0] * b[1] - a[1] * b[0]; }
Rational norm2(const RatVector& a) { return a[0] * a[0] + a[1] * a[1]; }
RatVector midpoint(const RatVector& a, const RatVector& b) { return {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2}; }

Rational segment_distance(const RatVector& p, const RatVector& a, const RatVector& b) {
  const RatVector ab = sub(b, a), ap = sub(p, a);
  const Rational len = norm2(ab);
  if (len == 0) return norm2(ap);
  Rational t = dot(ab, ap) / len;
  if (t <= 0) return norm2(ap);
  if (t >= 1) return norm2(sub(p, b));
  return norm2(ap) - t * t * len;
}

// Counterclockwise hull of lexicographically sorted, distinct points; collinear points dropped.
Piece convex_hull(std::vector<RatVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  Piece hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(sub(hull[k - 1], hull[k - 2]), sub(pts[i], hull[k - 2])) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(sub(hull[k - 1], hull[k - 2]), sub(pts[i], hull[k - 2])) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

struct Sub {
  Piece simplex;  // 1 to 3 points
  Rational upper;
  bool operator<(const Sub& o) const { return upper < o.upper; }
};

Rational distance_to_set(const RatVector& p, const PlanarSet& b) {
  Rational best = squared_distance(p, b.pieces.front());
  for (std::size_t k = 1; k < b.pieces.size() && best != 0; ++k) {
    Rational d = squared_distance(p, b.pieces[k]);
    if (d < best) best = std::move(d);
  }
  return best;
}

unsigned bits_for(const Rational& tol) {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  unsigned bits = 2;
  Rational step(1, 4);
  while (step > tol / 4) {
    step /= 2;
    ++bits;
  }
  return bits;
}

void check_nonempty(const PlanarSet& s) {
  if (s.pieces.empty()) throw DomainError("Hausdorff distance of an empty set");
  for (const auto& piece : s.pieces)
    for (const auto& v : piece)
      if (v.size() != 2) throw DomainError("Hausdorff distance is only supported in dimension 2");
}

}  // namespace

HSystem Box::system() const {
  HSystem s(2);
  s.weak = {{{1, 0}, xmin}, {{-1, 0}, -xmax}, {{0, 1}, ymin}, {{0, -1}, -ymax}};
  return s;
}

Rational squared_distance(const RatVector& p, const Piece& piece) {
  if (piece.size() == 1) return norm2(sub(p, piece[0]));
  if (piece.size() == 2) return segment_distance(p, piece[0], piece[1]);
  bool inside = true;
  for (std::size_t i = 0; i < piece.size() && inside; ++i)
    if (cross(sub(piece[(i + 1) % piece.size()], piece[i]), sub(p, piece[i])) < 0) inside = false;
  if (inside) return 0;
  Rational best = segment_distance(p, piece[0], piece[1]);
  for (std::size_t i = 1; i < piece.size(); ++i) {
    Rational d = segment_distance(p, piece[i], piece[(i + 1) % piece.size()]);
    if (d < best) best = std::move(d);
  }
  return best;
}

Box bounding_box(const Polytope& p, const Rational& inflate) {
  if (p.dim != 2) throw DomainError("bounding box is only supported in dimension 2");
  const auto vs = vertices(closed(p));
  if (vs.empty()) throw DomainError("empty polytope");
  Box b{vs[0][0], vs[0][0], vs[0][1], vs[0][1]};
  for (const auto& v : vs) {
    b.xmin = std::min(b.xmin, v[0]);
    b.xmax = std::max(b.xmax, v[0]);
    b.ymin = std::min(b.ymin, v[1]);
    b.ymax = std::max(b.ymax, v[1]);
  }
  b.xmin -= inflate;
  b.ymin -= inflate;
  b.xmax += inflate;
  b.ymax += inflate;
  return b;
}

PlanarSet planar_set(const Polytope& p) {
  if (p.dim != 2) throw DomainError("Hausdorff distance is only supported in dimension 2");
  return {{convex_hull(vertices(closed(p)))}};
}

PlanarSet planar_set(const PLComplex& c, const std::optional<Box>& box) {
  if (c.dim != 2) throw DomainError("Hausdorff distance is only supported in dimension 2");
  PlanarSet out;
  for (const auto& cell : c.cells) {
    HSystem sys = cell.system;
    if (box)
      sys = sys.conjoin(box->system());
    else if (!is_bounded(sys))
      throw DomainError("unbounded cell and no bounding box");
    if (!feasible(sys)) continue;
    auto vs = vertices(sys);
    if (!vs.empty()) out.pieces.push_back(convex_hull(std::move(vs)));
  }
  return out;
}

DistanceInterval directed_hausdorff(const PlanarSet& a, const PlanarSet& b, const Rational& tol) {
  check_nonempty(a);
  check_nonempty(b);
  const unsigned bits = bits_for(tol);

  Rational lower = 0;
  std::priority_queue<Sub> queue;
  auto push = [&](Piece simplex) {
    // Each d(., B_k) is convex, so its max over the simplex sits at a vertex.
    std::optional<Rational> upper;
    for (const auto& bk : b.pieces) {
      Rational worst = 0;
      for (const auto& v : simplex) worst = std::max(worst, squared_distance(v, bk));
      if (!upper || worst < *upper) upper = std::move(worst);
    }
    for (const auto& v : simplex) lower = std::max(lower, distance_to_set(v, b));
    if (*upper > lower) queue.push({std::move(simplex), std::move(*upper)});
  };
  for (const auto& piece : a.pieces) {
    if (piece.size() <= 2) {
      push(piece);
      continue;
    }
    for (std::size_t i = 1; i + 1 < piece.size(); ++i) push({piece[0], piece[i], piece[i + 1]});
  }

  for (std::size_t iter = 0;; ++iter) {
    while (!queue.empty() && queue.top().upper <= lower) queue.pop();
    const Rational upper = queue.empty() ? lower : queue.top().upper;
    const auto lo = sqrt_bounds(lower, bits).first;
    const auto hi = sqrt_bounds(upper, bits).second;
    if (hi - lo <= tol) return {lo, hi};
    if (iter > 4000000) throw DomainError("Hausdorff bound did not converge");
    Piece s = queue.top().simplex;
    queue.pop();
    if (s.size() == 2) {
      const auto mid = midpoint(s[0], s[1]);
      push({s[0], mid});
      push({mid, s[1]});
    } else {
      // Bisect the longest edge.
      std::size_t e = 0;
      Rational longest = -1;
      for (std::size_t i = 0; i < 3; ++i) {
        Rational len = norm2(sub(s[(i + 1) % 3], s[i]));
        if (len > longest) {
          longest = std::move(len);
          e = i;
        }
      }
      const auto& p0 = s[e];
      const auto& p1 = s[(e + 1) % 3];
      const auto& p2 = s[(e + 2) % 3];
      const auto mid = midpoint(p0, p1);
      push({p0, mid, p2});
      push({mid, p1, p2});
    }
  }
}

DistanceInterval hausdorff(const PlanarSet& a, const PlanarSet& b, const Rational& tol) {
  const auto ab = directed_hausdorff(a, b, tol);
  const auto ba = directed_hausdorff(b, a, tol);
  return {std::max(ab.lower, ba.lower), std::max(ab.upper, ba.upper)};
}

DistanceInterval hausdorff(const Polytope& a, const Polytope& b, const Rational& tol) {
  return hausdorff(planar_set(a), planar_set(b), tol);
}

DistanceInterval hausdorff(const PLComplex& a, const PLComplex& b, const Rational& tol,
                           const std::optional<Box>& box) {
  return hausdorff(planar_set(a, box), planar_set(b, box), tol);
}

std::vector<ConvergenceRow> convergence_experiment(const Polytope& base, std::size_t facet,
                                                   const std::vector<Rational>& deltas, const IntVector& m,
                                                   const Rational& tol) {
  if (base.dim != 2) throw DomainError("convergence experiment is only supported in dimension 2");
  const Box box = bounding_box(base, 1);
  const auto reference = planar_set(trop_relative(base, m), box);
  std::vector<ConvergenceRow> rows;
  for (const auto& delta : deltas) {
    const Polytope q = shift_offset(base, facet, delta);
    rows.push_back({delta, hausdorff(planar_set(trop_relative(q, m), box), reference, tol), validate(q).ok()});
  }
  return rows;
}

}  // namespace tropfiber
