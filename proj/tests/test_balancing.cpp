#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tropfiber/balancing.hpp"
#include "tropfiber/error.hpp"

using namespace fixtures;

namespace {

std::vector<RatVector> point_cells(const PLComplex& c) {
  std::vector<RatVector> out;
  for (const auto& cell : c.cells)
    if (cell.dim == 0) out.push_back(cell.witness);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("primary_normals") {
  const std::vector<IntVector> expect2{iv({0, 1}), iv({1, -1}), iv({1, 0})};
  CHECK(primary_normals(ex2()) == expect2);
  CHECK(primary_normals(cp2()) == expect2);
  CHECK(primary_normals(ex3()) == std::vector<IntVector>{iv({0, 1}), iv({1, 0}), iv({1, 1})});
}

TEST_CASE("detect on the examples") {
  const auto d2 = detect(ex2());
  REQUIRE(d2.cells.size() == 1);
  HSystem seg(2);
  seg.equalities = {{iv({0, 1}), q(1, 4)}};
  seg.weak = {{iv({1, 0}), q(1, 4)}, {iv({-1, 0}), q(-3, 8)}};
  CHECK(d2.cells[0].dim == 1);
  CHECK(set_equal(d2.cells[0].system, seg));
  CHECK(vertices(d2.cells[0].system) == std::vector<RatVector>{pt(q(1, 4), q(1, 4)), pt(q(3, 8), q(1, 4))});

  const auto d3 = detect(ex3());
  CHECK(d3.cells.size() == 2);
  CHECK(point_cells(d3) == std::vector<RatVector>{pt(1, 1), pt(3, q(5, 2))});

  const auto dc = detect(cp2());
  CHECK(dc.cells.size() == 1);
  CHECK(point_cells(dc) == std::vector<RatVector>{pt(q(1, 3), q(1, 3))});
}

TEST_CASE("strong bulk balancing") {
  CHECK(is_strongly_bulk_balanced(ex2(), pt(q(5, 16), q(1, 4))));
  CHECK_FALSE(is_strongly_bulk_balanced(ex2(), pt(q(1, 2), q(1, 4))));
  CHECK(is_strongly_bulk_balanced(ex3(), pt(3, q(5, 2))));
  CHECK_THROWS_AS(is_strongly_bulk_balanced(ex3(), pt(0, 0)), DomainError);
}

TEST_CASE("find_separating_primary_normal") {
  const auto p = ex2();
  const auto u = pt(q(1, 2), q(1, 4));
  CHECK(find_separating_primary_normal(p, u, iv({1, 0})) == iv({1, 0}));
  // Every direction with full support has u in its tropicalization here.
  CHECK(member(p, iv({2, 1}), u));
  const auto m = find_separating_primary_normal(p, u, iv({-3, 0}));
  const auto prim = primary_normals(p);
  CHECK(std::find(prim.begin(), prim.end(), m) != prim.end());
  CHECK_FALSE(member(p, m, u));

  const auto e3 = ex3();
  const auto v = pt(3, 2);
  REQUIRE_FALSE(member(e3, iv({0, 1}), v));
  const auto m3 = find_separating_primary_normal(e3, v, iv({0, 1}));
  CHECK_FALSE(member(e3, m3, v));
  CHECK_THROWS_WITH_AS(find_separating_primary_normal(p, pt(q(5, 16), q(1, 4)), iv({1, 0})),
                       "u is in Trop(P, m)", DomainError);

  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coord(0, 64), mm(-5, 5);
  for (const auto& poly : {cp2(), ex2(), ex3()}) {
    const auto pr = primary_normals(poly);
    const auto box = vertices(closed(poly));
    Rational hi = 0;
    for (const auto& v : box) hi = std::max({hi, v[0], v[1]});
    int done = 0;
    for (int trial = 0; trial < 5000 && done < 60; ++trial) {
      const auto w = pt(hi * q(coord(rng), 64), hi * q(coord(rng), 64));
      if (!is_interior(poly, w)) continue;
      IntVector dir = iv({mm(rng), mm(rng)});
      if (is_zero(dir) || member(poly, dir, w)) continue;
      const auto sep = find_separating_primary_normal(poly, w, dir);
      CHECK(std::find(pr.begin(), pr.end(), sep) != pr.end());
      CHECK_FALSE(member(poly, sep, w));
      ++done;
    }
    CHECK(done == 60);
  }
}

TEST_CASE("adapted_basis") {
  const auto b2 = adapted_basis(ex2(), pt(q(3, 8), q(1, 4)));
  CHECK(b2.flag == std::vector<std::size_t>{2, 0});
  CHECK(b2.scale == 1);
  CHECK(b2.vectors == std::vector<RatVector>{pt(0, 1), pt(1, 0)});

  const auto bc = adapted_basis(cp2(), pt(q(1, 3), q(1, 3)));
  CHECK(bc.flag == std::vector<std::size_t>{0, 1});
  CHECK(bc.vectors == std::vector<RatVector>{pt(1, 0), pt(0, 1)});
  CHECK(bc.scale == 1);

  const auto sq = load("rotated_square.json");
  const auto bs = adapted_basis(sq, pt(0, 0));
  CHECK(bs.flag == std::vector<std::size_t>{0, 1});
  CHECK(bs.scale == 2);
  CHECK(bs.vectors == std::vector<RatVector>{pt(q(1, 2), q(1, 2)), pt(q(1, 2), q(-1, 2))});
  CHECK(coords_in_basis(iv({-1, 1}), bs.vectors) == pt(0, -2));

  // Prefix spans and integrality.
  for (const auto& p : {cp2(), ex2(), ex3()}) {
    const auto u = pt(q(1, 5), q(1, 7));
    if (!is_interior(p, u)) continue;
    const auto b = adapted_basis(p, u);
    for (const auto& f : p.facets)
      for (const auto& c : coords_in_basis(f.normal, b.vectors)) CHECK(denominator(c) == 1);
    for (std::size_t k = 0; k < b.flag.size(); ++k) {
      RatVector scaled = b.vectors[k];
      for (auto& x : scaled) x *= b.scale;
      CHECK(scaled == to_rational(p.facets[b.flag[k]].normal));
    }
  }
}

TEST_CASE("leading_term_system") {
  const auto u = pt(q(1, 3), q(1, 3));
  const auto b = adapted_basis(cp2(), u);
  const auto sys = leading_term_system(cp2(), u, b, false);
  REQUIRE(sys.equations.size() == 2);
  CHECK(format_polynomial(sys.equations[0], b) == "-y_{1,1}^{-1} y_{1,2}^{-1} + y_{1,1}");
  CHECK(format_polynomial(sys.equations[1], b) == "-y_{1,1}^{-1} y_{1,2}^{-1} + y_{1,2}");

  const auto v = pt(q(5, 16), q(1, 4));
  const auto b2 = adapted_basis(ex2(), v);
  const auto s2 = leading_term_system(ex2(), v, b2, false);
  REQUIRE(s2.levels.size() == 2);
  CHECK(format_polynomial(s2.equations[0], b2) == "-y_{1,1}^{-1} + y_{1,1}");
  CHECK(format_polynomial(s2.equations[1], b2) == "y_{2,1} + y_{1,1} y_{2,1}");

  const auto g = leading_term_system(ex2(), v, b2, true);
  CHECK(format_polynomial(g.equations[1], b2) == "c_{2,1} y_{2,1} + c_{2,2} y_{1,1} y_{2,1}");
  CHECK_THROWS_AS(leading_term_system(ex2(), pt(q(1, 2), q(1, 4)), b2, false), DomainError);
}

TEST_CASE("solvable_over_torus") {
  CHECK(solvable_over_torus(ex2(), pt(q(5, 16), q(1, 4))));
  CHECK_FALSE(solvable_over_torus(ex2(), pt(q(1, 2), q(1, 4))));
  CHECK(solvable_over_torus(cp2(), pt(q(1, 3), q(1, 3))));
  CHECK_THROWS_AS(solvable_over_torus(cp2(), pt(1, 1)), DomainError);
}

TEST_CASE("balanced_candidates") {
  CHECK(balanced_candidates(cp2()) == std::vector<RatVector>{pt(q(1, 3), q(1, 3))});
  CHECK(balanced_candidates(ex3()) == std::vector<RatVector>{pt(1, 1)});
  CHECK(balanced_candidates(blowup1(q(1, 2))) == std::vector<RatVector>{pt(q(3, 8), q(1, 4))});
}

TEST_CASE("blowup family detect") {
  CHECK(point_cells(detect(blowup1(q(1, 2)))) == std::vector<RatVector>{pt(q(3, 8), q(1, 4))});
  CHECK(point_cells(detect(blowup1(q(2, 3)))) == std::vector<RatVector>{pt(q(1, 3), q(1, 3))});
  CHECK(point_cells(detect(blowup1(q(3, 4)))) == std::vector<RatVector>{pt(q(1, 4), q(1, 2)), pt(q(1, 3), q(1, 3))});
}
