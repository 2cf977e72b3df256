#include <doctest.h>

#include <random>

#include "tropfiber/error.hpp"
#include "tropfiber/ratlin.hpp"

using namespace tropfiber;

namespace {
IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
RatVector rv(std::initializer_list<const char*> xs) {
  RatVector v;
  for (auto x : xs) v.push_back(parse_rational(x));
  return v;
}
}  // namespace

TEST_CASE("primitive") {
  CHECK(primitive(iv({2, 4})) == iv({1, 2}));
  CHECK(primitive(iv({0, 0, 3})) == iv({0, 0, 1}));
  CHECK(primitive(iv({-2, 2})) == iv({-1, 1}));
  CHECK_THROWS_AS(primitive(iv({0, 0})), DomainError);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector v = iv({d(rng), d(rng), d(rng)});
    if (is_zero(v)) continue;
    int k = d(rng);
    if (k == 0) k = 3;
    IntVector kv = v;
    for (auto& x : kv) x *= k;
    auto p = primitive(v), q = primitive(kv);
    if (k < 0)
      for (auto& x : q) x = -x;
    CHECK(p == q);
  }
}

TEST_CASE("rank") {
  std::vector<IntVector> vs{iv({1, 0}), iv({1, 1}), iv({0, 1}), iv({-1, -1}), iv({0, -1})};
  CHECK(rank(vs) == 2);
  std::vector<IntVector> one{iv({1, 1})};
  CHECK(rank(one) == 1);
  CHECK(rank(std::span<const IntVector>{}) == 0);
  std::vector<IntVector> mixed{iv({1, 0}), iv({1, 0, 0})};
  CHECK_THROWS_AS(rank(mixed), ParseError);
}

TEST_CASE("kernel_primitive") {
  std::vector<IntVector> a{iv({1, 1})};
  CHECK(kernel_primitive(a, 2) == iv({1, -1}));
  std::vector<IntVector> b{iv({1, 0})};
  CHECK(kernel_primitive(b, 2) == iv({0, 1}));
  std::vector<IntVector> c{iv({1, 0, 0}), iv({0, 1, 0})};
  CHECK(kernel_primitive(c, 3) == iv({0, 0, 1}));
  std::vector<IntVector> bad{iv({1, 0}), iv({0, 1})};
  CHECK_THROWS_AS(kernel_primitive(bad, 2), DomainError);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<IntVector> vs{iv({d(rng), d(rng), d(rng)}), iv({d(rng), d(rng), d(rng)})};
    if (rank(vs) != 2) continue;
    auto k = kernel_primitive(vs, 3);
    for (const auto& v : vs) CHECK(dot(k, v) == 0);
    CHECK(primitive(k) == k);
    CHECK(sign_canonical(k) == k);
  }
}

TEST_CASE("coords_in_basis") {
  std::vector<RatVector> basis{rv({"1", "0"}), rv({"1", "1"})};
  CHECK(coords_in_basis(iv({3, 1}), basis) == rv({"2", "1"}));
  std::vector<RatVector> id{rv({"1", "0"}), rv({"0", "1"})};
  CHECK(coords_in_basis(iv({0, 1}), id) == rv({"0", "1"}));
  std::vector<RatVector> sing{rv({"1", "0"}), rv({"2", "0"})};
  CHECK_THROWS_AS(coords_in_basis(iv({1, 1}), sing), DomainError);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  auto rq = [&] { return Rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<RatVector> b{{rq(), rq(), rq()}, {rq(), rq(), rq()}, {rq(), rq(), rq()}};
    if (rank(b) != 3) continue;
    RatVector c{rq(), rq(), rq()};
    RatVector v(3);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) v[k] += c[i] * b[i][k];
    CHECK(coords_in_basis(v, b) == c);
  }
}

TEST_CASE("rational text") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-5")) == "-5");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("sqrt_bounds") {
  auto [lo, hi] = sqrt_bounds(Rational(25), 20);
  CHECK(lo == 5);
  CHECK(hi == 5);
  auto [a, b] = sqrt_bounds(Rational(2), 30);
  CHECK(a * a <= 2);
  CHECK(b * b >= 2);
  CHECK(b - a <= Rational(1, 1 << 30));
  CHECK_THROWS_AS(sqrt_bounds(Rational(-1), 4), DomainError);
}
