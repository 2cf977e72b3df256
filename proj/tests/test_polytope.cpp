#include <doctest.h>

#include "fixtures.hpp"
#include "tropfiber/error.hpp"

using namespace fixtures;

TEST_CASE("parse and validate") {
  const auto p = ex2();
  CHECK(p.facet_count() == 5);
  CHECK(validate(ex3()).ok());

  CHECK_THROWS_WITH_AS(make_polytope(2, {{iv({2, 0}), 0}, {iv({0, 1}), 0}, {iv({-1, -1}), -1}}),
                       "non-primitive normal at facet 1", DomainError);
  CHECK_THROWS_WITH_AS(
      make_polytope(2, {{iv({1, 0}), 0}, {iv({0, 1}), 0}, {iv({-1, -1}), -1}, {iv({1, 0}), -5}}),
      "redundant facet 4", DomainError);

  Polytope strip{2, {{iv({1, 0}), 0}, {iv({-1, 0}), -1}}};
  auto rs = validate(strip);
  CHECK_FALSE(rs.bounded);
  CHECK(rs.full_dimensional);

  Polytope empty{2, {{iv({1, 0}), 1}, {iv({-1, 0}), 1}}};
  CHECK_FALSE(validate(empty).full_dimensional);

  Polytope ragged{2, {{iv({1, 0, 0}), 0}}};
  CHECK_THROWS_AS(validate(ragged), ParseError);
}

TEST_CASE("facet_value") {
  CHECK(facet_value(ex2(), 3, pt(q(3, 8), q(1, 4))) == q(3, 8));
  CHECK(facet_value(ex3(), 4, pt(3, q(5, 2))) == q(3, 2));
  CHECK(facet_value(cp2(), 0, pt(0, q(1, 2))) == 0);
  CHECK_THROWS_AS(facet_value(cp2(), 3, pt(0, 0)), DomainError);
}

TEST_CASE("energy_filtration") {
  auto f = energy_filtration(ex2(), pt(q(3, 8), q(1, 4)));
  CHECK(f.levels == std::vector<Rational>{q(1, 4), q(3, 8)});
  CHECK(f.groups == std::vector<std::vector<std::size_t>>{{2, 4}, {0, 1, 3}});
  CHECK(f.a == std::vector<std::size_t>{2, 3});
  CHECK(f.d == std::vector<std::size_t>{1, 1});
  CHECK(f.kappa == 2);

  auto g = energy_filtration(cp2(), pt(q(1, 3), q(1, 3)));
  CHECK(g.levels == std::vector<Rational>{q(1, 3)});
  CHECK(g.a == std::vector<std::size_t>{3});
  CHECK(g.d == std::vector<std::size_t>{2});
  CHECK(g.kappa == 1);

  auto h = energy_filtration(ex2(), pt(q(5, 16), q(1, 4)));
  CHECK(h.levels == std::vector<Rational>{q(1, 4), q(5, 16), q(7, 16)});
  CHECK(h.groups == std::vector<std::vector<std::size_t>>{{2, 4}, {0, 1}, {3}});
  CHECK(h.d == std::vector<std::size_t>{1, 1, 0});
  CHECK(h.kappa == 2);

  CHECK_THROWS_AS(energy_filtration(cp2(), pt(0, q(1, 2))), DomainError);
  CHECK_THROWS_AS(energy_filtration(cp2(), pt(2, 2)), DomainError);
}

TEST_CASE("leading_order_potential") {
  auto lp = leading_order_potential(cp2(), pt(q(1, 3), q(1, 3)));
  REQUIRE(lp.y_form.terms().size() == 3);
  CHECK(lp.y_form.terms()[2].exponent == iv({-1, -1}));
  for (const auto& t : lp.y_form.terms()) CHECK(t.valuation == q(1, 3));

  auto l3 = leading_order_potential(ex3(), pt(1, 1));
  std::vector<Rational> xs;
  for (const auto& t : l3.x_form.terms()) xs.push_back(t.valuation);
  CHECK(xs == std::vector<Rational>{0, 0, 2, 5, 1});

  auto l2 = leading_order_potential(ex2(), pt(q(3, 8), q(1, 4)));
  std::vector<Rational> ys;
  for (const auto& t : l2.y_form.terms()) ys.push_back(t.valuation);
  CHECK(ys == std::vector<Rational>{q(3, 8), q(3, 8), q(1, 4), q(3, 8), q(1, 4)});
  CHECK_THROWS_AS(leading_order_potential(cp2(), pt(1, 0)), DomainError);
}

TEST_CASE("translate_facet") {
  auto t = translate_facet(ex2(), 0, q(1, 8));
  CHECK(t.facets[0].offset == q(-1, 8));
  CHECK(t.facets[0].normal == ex2().facets[0].normal);
  CHECK(translate_facet(ex2(), 0, 0) == ex2());
  CHECK_THROWS_AS(translate_facet(cp2(), 2, -2), DomainError);

  // Only the translated facet's value changes.
  const auto base = ex2();
  const auto moved = translate_facet(base, 1, q(1, 32));
  const auto u = pt(q(5, 16), q(1, 3));
  for (std::size_t j = 0; j < base.facet_count(); ++j) {
    const Rational diff = facet_value(moved, j, u) - facet_value(base, j, u);
    CHECK(diff == (j == 1 ? q(1, 32) : q(0)));
  }
}

TEST_CASE("blowup1 parameter") {
  CHECK(blowup1(q(3, 4)).facets[3].offset == q(-3, 4));
  CHECK(load("blowup1.json").facets[3].offset == q(-1, 2));
  CHECK_THROWS_AS(load("blowup1.json", {{"d", q(1)}}), ParseError);
}
