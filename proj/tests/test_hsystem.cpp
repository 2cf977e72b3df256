#include <doctest.h>

#include <random>

#include "tropfiber/error.hpp"
#include "tropfiber/hsystem.hpp"

using namespace tropfiber;

namespace {
LinearRow row(std::initializer_list<long> a, Rational b) {
  IntVector v;
  for (long x : a) v.emplace_back(x);
  return {v, b};
}
RatVector pt(Rational a, Rational b) { return {a, b}; }

// Example-2 interior.
HSystem ex2_interior() {
  HSystem s(2);
  s.strict = {row({1, 0}, 0), row({1, 1}, Rational(1, 4)), row({0, 1}, 0), row({-1, -1}, -1),
              row({0, -1}, Rational(-1, 2))};
  return s;
}
}  // namespace

TEST_CASE("feasible") {
  HSystem a(1);
  a.weak = {row({1}, 0), row({-1}, 1)};
  CHECK_FALSE(feasible(a));

  HSystem tri(2);
  tri.strict = {row({1, 0}, 0), row({0, 1}, 0), row({-1, -1}, -1)};
  auto w = feasible(tri);
  REQUIRE(w);
  CHECK(tri.satisfies(*w));

  HSystem c = ex2_interior();
  c.equalities = {row({1, -1}, 0), row({0, 1}, Rational(1, 4))};
  auto wc = feasible(c);
  REQUIRE(wc);
  CHECK(c.satisfies(*wc));

  // Strict rows with empty interior: u1 > 0, u1 < 0.
  HSystem d(1);
  d.strict = {row({1}, 0), row({-1}, 0)};
  CHECK_FALSE(feasible(d));
}

TEST_CASE("affine_dim") {
  HSystem seg(2);
  seg.equalities = {row({0, 1}, Rational(1, 4))};
  seg.weak = {row({1, 0}, Rational(1, 4)), row({-1, 0}, Rational(-3, 8))};
  CHECK(affine_dim(seg) == 1);
  HSystem p(2);
  p.equalities = {row({1, 0}, 1), row({0, 1}, 1)};
  CHECK(affine_dim(p) == 0);
  HSystem e(2);
  e.weak = {row({1, 0}, 1), row({-1, 0}, 0)};
  CHECK(affine_dim(e) == -1);
  HSystem implicit(2);
  implicit.weak = {row({1, 0}, 0), row({-1, 0}, 0), row({0, 1}, 0)};
  CHECK(affine_dim(implicit) == 1);
}

TEST_CASE("remove_redundant") {
  HSystem a(1);
  a.weak = {row({1}, 0), row({1}, -1)};
  auto ra = remove_redundant(a);
  CHECK(ra.weak == std::vector<LinearRow>{row({1}, 0)});
  CHECK(ra.equalities.empty());

  HSystem b(1);
  b.weak = {row({1}, 0), row({-1}, 0)};
  auto rb = remove_redundant(b);
  CHECK(rb.equalities == std::vector<LinearRow>{row({1}, 0)});
  CHECK(rb.weak.empty());

  HSystem c(2);
  c.weak = {row({2, 0}, 1), row({1, 0}, Rational(1, 2))};
  auto rc = remove_redundant(c);
  CHECK(rc.weak.size() == 1);

  HSystem bad(1);
  bad.weak = {row({1}, 1), row({-1}, 0)};
  CHECK_THROWS_AS(remove_redundant(bad), DomainError);

  // Randomized: solution set preserved.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3), r(-4, 4), qd(1, 8);
  int tested = 0;
  for (int trial = 0; trial < 150; ++trial) {
    HSystem s(2);
    int rows = 3 + trial % 5;
    for (int k = 0; k < rows; ++k) {
      auto rr = row({d(rng), d(rng)}, Rational(r(rng), qd(rng)));
      if (is_zero(rr.coeffs)) continue;
      (k % 3 == 0 ? s.strict : s.weak).push_back(rr);
    }
    if (!feasible(s)) continue;
    ++tested;
    auto t = remove_redundant(s);
    CHECK(set_equal(s, t));
    CHECK(t.row_count() <= s.row_count());
    for (int k = 0; k < 30; ++k) {
      auto u = pt(Rational(r(rng), qd(rng)), Rational(r(rng), qd(rng)));
      CHECK(s.satisfies(u) == t.satisfies(u));
    }
  }
  CHECK(tested > 20);
}

TEST_CASE("vertices") {
  HSystem tri(2);
  tri.weak = {row({1, 0}, 0), row({0, 1}, 0), row({-1, -1}, -1)};
  CHECK(vertices(tri) == std::vector<RatVector>{pt(0, 0), pt(0, 1), pt(1, 0)});

  HSystem ex2 = ex2_interior();
  auto vs = vertices(ex2);
  std::vector<RatVector> expect{pt(0, Rational(1, 4)), pt(0, Rational(1, 2)), pt(Rational(1, 4), 0),
                                pt(Rational(1, 2), Rational(1, 2)), pt(1, 0)};
  CHECK(vs == expect);

  HSystem seg(2);
  seg.equalities = {row({0, 1}, Rational(1, 4))};
  seg.weak = {row({1, 0}, Rational(1, 4)), row({-1, 0}, Rational(-3, 8))};
  CHECK(vertices(seg) == std::vector<RatVector>{pt(Rational(1, 4), Rational(1, 4)), pt(Rational(3, 8), Rational(1, 4))});

  HSystem half(2);
  half.weak = {row({1, 0}, 0)};
  CHECK_THROWS_AS(vertices(half), DomainError);
  CHECK_THROWS_AS(vertices(HSystem(4)), DomainError);
}

TEST_CASE("contains") {
  HSystem tri(2);
  tri.weak = {row({1, 0}, 0), row({0, 1}, 0), row({-1, -1}, -1)};
  HSystem open = tri;
  open.strict = open.weak;
  open.weak.clear();
  CHECK(contains(tri, open));
  CHECK_FALSE(contains(open, tri));
  HSystem pt1(2);
  pt1.equalities = {row({1, 0}, Rational(1, 3)), row({0, 1}, Rational(1, 3))};
  CHECK(contains(open, pt1));
  CHECK(set_equal(tri, remove_redundant(tri)));
}
