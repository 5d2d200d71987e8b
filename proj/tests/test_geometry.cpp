#include <doctest.h>

#include <random>
#include <set>

#include "multideal/errors.hpp"
#include "multideal/geometry.hpp"
#include "multideal/linalg.hpp"
#include "oracles.hpp"

using namespace multideal;

namespace {

NewtonPolyhedron newt(std::vector<ExponentVector> gens, std::size_t d) {
  return newton_polyhedron(std::span<const ExponentVector>(gens), orthant_rays(d));
}

std::set<std::string> facet_strings(const NewtonPolyhedron& p) {
  std::set<std::string> out;
  for (const auto& f : p.facets()) out.insert(to_string(f.normal) + ">=" + f.offset.get_str());
  return out;
}

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(floor(make_rational(-7, 2)) == -4);
  CHECK(ceil(make_rational(7, 2)) == 4);
  CHECK(parse_rational("5/6") == Rational(5, 6));
  CHECK(parse_rational("-3") == -3);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), Error);
  CHECK(to_int64(Integer(12)) == 12);
}

TEST_CASE("linear algebra") {
  RationalMatrix m{rv({2, 1}), rv({1, 3})};
  CHECK(determinant(m) == 5);
  CHECK(rank(m) == 2);
  CHECK(rank({rv({1, 2}), rv({2, 4})}) == 1);
  auto x = solve(m, rv({3, 4}));
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve({rv({1, 2}), rv({2, 4})}, rv({1, 1})));
  auto n = orthogonal_complement({rv({1, 2, 3}), rv({0, 1, 1})}, 3);
  CHECK(dot(n, rv({1, 2, 3})) == 0);
  CHECK(dot(n, rv({0, 1, 1})) == 0);
  CHECK(primitive_integer({Rational(2, 3), Rational(-4, 3)}) == IntegerVector{1, -2});
}

TEST_CASE("newton polyhedron facets") {
  auto p = newt({{2, 0}, {0, 3}}, 2);
  CHECK(facet_strings(p) == std::set<std::string>{"(0,1)>=0", "(1,0)>=0", "(3,2)>=6"});
  CHECK(p.vertices().size() == 2);

  auto line = newt({{1}}, 1);
  CHECK(facet_strings(line) == std::set<std::string>{"(1)>=1"});

  // the A_4 ideal in lattice coordinates: (2,2) = z^2 is not a vertex
  auto a4 = newt({{5, 0}, {0, 20}, {1, 16}, {2, 12}, {3, 8}, {4, 4}}, 2);
  CHECK(a4.vertices() == std::vector<RationalVector>{rv({0, 20}), rv({5, 0})});
  CHECK(facet_strings(a4) == std::set<std::string>{"(0,1)>=0", "(1,0)>=0", "(4,1)>=20"});

  CHECK_THROWS_AS(newt({}, 2), Error);
}

TEST_CASE("facets agree with a brute-force lattice check") {
  // every facet inequality is tight on two generators and valid on all, and
  // lattice points satisfy all facets iff they dominate a convex combination
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto pts = oracle::random_points(rng, 2, 1 + static_cast<int>(rng() % 5), 9);
    std::vector<ExponentVector> g;
    for (const auto& q : pts) g.emplace_back(q);
    auto p = newt(g, 2);
    for (std::int64_t u = 0; u <= 12; ++u)
      for (std::int64_t v = 0; v <= 12; ++v) {
        bool by_facets = contains(p, rv({u, v}));
        // closed membership: some point of conv(G) is <= (u, v); test via strict at (u + eps)
        const Rational eps = make_rational(1, 1000);
        bool by_oracle = oracle::strictly_dominated_2d(pts, 1, pts, 0, {Rational(u) + eps, Rational(v) + eps});
        CHECK(by_facets == by_oracle);
      }
  }
}

TEST_CASE("scaling") {
  auto p = newt({{2, 0}, {0, 3}}, 2);
  CHECK(scale(p, 1) == p);
  CHECK(facet_strings(scale(p, 2)).count("(3,2)>=12") == 1);
  CHECK(scale(scale(p, Rational(1, 2)), 2) == p);
  CHECK_THROWS_AS(scale(p, 0), Error);
  CHECK_THROWS_AS(scale(p, -1), Error);
}

TEST_CASE("minkowski sum") {
  auto p = newt({{2, 0}, {0, 3}}, 2);
  auto zero = newt({{0, 0}}, 2);
  CHECK(minkowski_sum(p, zero) == p);
  auto s = minkowski_sum(newt({{2, 0}}, 2), newt({{0, 3}}, 2));
  CHECK(facet_strings(s) == std::set<std::string>{"(0,1)>=3", "(1,0)>=2"});
  CHECK_THROWS_AS(minkowski_sum(p, newt({{1, 1, 1}}, 3)), Error);
}

TEST_CASE("interior membership") {
  auto p = newt({{2, 0}, {0, 3}}, 2);
  CHECK_FALSE(contains_interior(p, rv({1, 1})));
  CHECK(contains(p, rv({1, 1})) == false);
  CHECK(contains_interior(p, rv({2, 1})));
  for (const auto& v : p.vertices()) CHECK_FALSE(contains_interior(p, v));
  InteriorTester tester(p, rv({1, 1}));
  CHECK(tester.inside(ExponentVector{1, 0}));
  CHECK(tester.inside(ExponentVector{0, 1}));
  CHECK_FALSE(tester.inside(ExponentVector{0, 0}));
}

TEST_CASE("support function") {
  auto p = newt({{2, 0}, {0, 3}}, 2);
  CHECK(support_value(p, IntegerVector{1, 0}) == 0);
  CHECK(support_value(p, IntegerVector{3, 2}) == 6);
  CHECK(support_value(newt({{1}}, 1), IntegerVector{1}) == 1);
  CHECK_THROWS_AS(support_value(p, IntegerVector{-1, 1}), Error);
}

TEST_CASE("membership interval") {
  auto p = newt({{2, 0}}, 2);
  auto q = newt({{0, 3}}, 2);
  auto i = membership_interval(p, q, 1, rv({2, 1}));
  REQUIRE_FALSE(i.empty);
  CHECK(i.lo == Rational(2, 3));
  CHECK(i.hi == 1);
  CHECK(membership_interval(p, q, 1, rv({0, 0})).empty);

  SumMembershipSystem sys(p, q, 1);
  LambdaSet s = sys.strict_set(rv({1, 2}));
  CHECK_FALSE(s.empty);
  CHECK(s.lo == Rational(1, 3));
  CHECK(s.hi == Rational(1, 2));
  CHECK_FALSE(s.lo_closed);
  CHECK_FALSE(s.hi_closed);
}

TEST_CASE("property: membership interval matches a 1/360 grid and its endpoints") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_points(rng, 2, 1 + static_cast<int>(rng() % 3), 6);
    auto b = oracle::random_points(rng, 2, 1 + static_cast<int>(rng() % 3), 6);
    std::vector<ExponentVector> ga, gb;
    for (const auto& x : a) ga.emplace_back(x);
    for (const auto& x : b) gb.emplace_back(x);
    auto p = newt(ga, 2), q = newt(gb, 2);
    Rational t = make_rational(1 + static_cast<std::int64_t>(rng() % 6), 1 + static_cast<std::int64_t>(rng() % 4));
    RationalVector x = rv({static_cast<long>(rng() % 10), static_cast<long>(rng() % 10)});
    auto interval = membership_interval(p, q, t, x);
    for (int k = 0; k <= 360; ++k) {
      Rational lam = t * make_rational(k, 360);
      bool inside = contains(weighted_sum(p, q, t, lam), x);
      CHECK(inside == interval.contains(lam));
    }
    if (!interval.empty) {
      CHECK(contains(weighted_sum(p, q, t, interval.lo), x));
      CHECK(contains(weighted_sum(p, q, t, interval.hi), x));
    }
  }
}

TEST_CASE("property: H/V round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 1 + rng() % 3;
    auto pts = oracle::random_points(rng, d, 1 + static_cast<int>(rng() % 6), 12);
    std::vector<ExponentVector> g;
    for (const auto& x : pts) g.emplace_back(x);
    auto p = newt(g, d);
    auto back = vertices_from_facets(p);
    std::sort(back.begin(), back.end());
    CHECK(back == p.vertices());
    CHECK(NewtonPolyhedron::from_points(back, orthant_rays(d)) == p);
  }
}

TEST_CASE("property: support function is additive and scales linearly") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 1 + rng() % 3;
    auto a = oracle::random_points(rng, d, 1 + static_cast<int>(rng() % 4), 8);
    auto b = oracle::random_points(rng, d, 1 + static_cast<int>(rng() % 4), 8);
    std::vector<ExponentVector> ga, gb;
    for (const auto& x : a) ga.emplace_back(x);
    for (const auto& x : b) gb.emplace_back(x);
    auto p = newt(ga, d), q = newt(gb, d);
    IntegerVector n(d);
    for (auto& c : n) c = static_cast<long>(rng() % 7);
    CHECK(support_value(minkowski_sum(p, q), n) == support_value(p, n) + support_value(q, n));
    Rational t = make_rational(1 + static_cast<std::int64_t>(rng() % 9), 1 + static_cast<std::int64_t>(rng() % 5));
    CHECK(support_value(scale(p, t), n) == t * support_value(p, n));
    // independent: the minimum over the generators themselves
    Rational direct = -1;
    for (const auto& x : a) {
      Rational v = dot(n, ExponentVector(x).to_rational());
      if (direct < 0 || v < direct) direct = v;
    }
    CHECK(support_value(p, n) == direct);
  }
}
