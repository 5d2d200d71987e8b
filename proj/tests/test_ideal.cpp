#include <doctest.h>

#include <random>

#include "multideal/errors.hpp"
#include "multideal/ideal.hpp"
#include "oracles.hpp"

using namespace multideal;

namespace {

Ring xy() { return make_polynomial_ring({"x", "y"}); }
Ring xyz() { return make_polynomial_ring({"x", "y", "z"}); }

MonomialIdeal random_ideal(std::mt19937_64& rng, const Ring& ring, int max_exp = 6) {
  return oracle::ideal_of(ring, oracle::random_points(rng, ring->dimension(), 1 + static_cast<int>(rng() % 4), max_exp));
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("construction and printing") {
  Ring r = xy();
  MonomialIdeal a = parse_ideal(r, "(y^3, x^2, x^2*y)");
  CHECK(a.size() == 2);
  CHECK(a.to_string() == "(x^2, y^3)");
  CHECK(parse_ideal(r, a.to_string()) == a);
  CHECK(MonomialIdeal::unit(r).to_string() == "(1)");
  CHECK(parse_ideal(r, "(1)").is_unit());
  CHECK(parse_ideal(r, "(x, 1)").is_unit());
  CHECK(kind_of([&] { MonomialIdeal(r, {}); }) == ErrorKind::ZeroIdeal);
  CHECK(kind_of([&] { parse_ideal(r, "(x^2, w)"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_ideal(r, "x^2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { MonomialIdeal(r, {ExponentVector{-1, 0}}); }) == ErrorKind::NotInSemigroup);
}

TEST_CASE("sum, product, power") {
  Ring r = xy();
  MonomialIdeal a = parse_ideal(r, "(x^2, y^3)"), m = parse_ideal(r, "(x, y)");
  CHECK(product(a, m).to_string() == "(x^3, x^2*y, x*y^3, y^4)");
  CHECK(sum(a, MonomialIdeal::unit(r)).is_unit());
  CHECK(sum(a, m) == m);
  CHECK(power(m, 3).size() == 4);
  CHECK(power(a, 0).is_unit());
  CHECK(power(a, 1) == a);
  CHECK(power(a, 2) == product(a, a));
  CHECK(kind_of([&] { power(a, -1); }) == ErrorKind::NonpositivePower);
  CHECK(kind_of([&] { sum(a, parse_ideal(xyz(), "(x)")); }) == ErrorKind::AmbientMismatch);
}

TEST_CASE("membership and containment") {
  Ring r = xy();
  MonomialIdeal a = parse_ideal(r, "(x^2, y^3)");
  CHECK(member(a, ExponentVector{1, 4}));
  CHECK_FALSE(member(a, ExponentVector{1, 1}));
  CHECK(contains(a, a));
  CHECK(contains(parse_ideal(r, "(x, y)"), a));
  CHECK_FALSE(contains(a, parse_ideal(r, "(x, y)")));
  auto w = containment_witness(a, parse_ideal(r, "(x, y^3)"));
  REQUIRE(w);
  CHECK(*w == ExponentVector{1, 0});
}

TEST_CASE("intersection and colon") {
  Ring r = xy();
  MonomialIdeal a = parse_ideal(r, "(x^2, y^3)"), b = parse_ideal(r, "(x*y)");
  CHECK(intersect(a, b).to_string() == "(x^2*y, x*y^3)");
  CHECK(colon(a, parse_ideal(r, "(x)")).to_string() == "(x, y^3)");
  CHECK(colon(a, a).is_unit());
}

TEST_CASE("property: intersection and colon against pointwise definitions") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Ring r = rng() % 2 ? xy() : xyz();
    MonomialIdeal a = random_ideal(rng, r), b = random_ideal(rng, r);
    MonomialIdeal i = intersect(a, b), c = colon(a, b);
    CHECK(contains(a, product(c, b)));
    for (int s = 0; s < 30; ++s) {
      std::vector<std::int64_t> v(r->dimension());
      for (auto& x : v) x = static_cast<std::int64_t>(rng() % 9);
      ExponentVector w(v);
      CHECK(member(i, w) == (member(a, w) && member(b, w)));
      bool times_b_in_a = true;
      for (const auto& g : b.generators()) times_b_in_a &= member(a, w + g);
      CHECK(member(c, w) == times_b_in_a);
    }
  }
}

TEST_CASE("Frobenius powers and roots") {
  Ring r = xy();
  CHECK(bracket_power(parse_ideal(r, "(x, y)"), 3).to_string() == "(x^3, y^3)");
  CHECK(bracket_power(MonomialIdeal::unit(r), 5).is_unit());
  CHECK(bracket_power(parse_ideal(r, "(x^2*y)"), 5).to_string() == "(x^10*y^5)");
  // the smallest J with a ⊆ J^[q] rounds each exponent down
  CHECK(bracket_root(parse_ideal(r, "(x^5)"), 3).to_string() == "(x)");
  CHECK(bracket_root(parse_ideal(r, "(x^2*y^5)"), 3).to_string() == "(y)");
  CHECK(bracket_root(parse_ideal(r, "(x^2, y^2)"), 3).is_unit());
  MonomialIdeal a = parse_ideal(r, "(x^2, x*y^4, y^7)");
  CHECK(bracket_root(bracket_power(a, 4), 4) == a);

  CHECK(FrobeniusLevel::make(3, 2).q == 9);
  CHECK(kind_of([] { FrobeniusLevel::make(4, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { FrobeniusLevel::make(2, -1); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { FrobeniusLevel::make(2, 70); }) == ErrorKind::Overflow);
  CHECK(kind_of([] { bracket_root(parse_ideal(make_A2n(2), "(x)"), 2); }) == ErrorKind::NotPolynomialAmbient);
}

TEST_CASE("property: Frobenius adjunction") {
  // bracket_root(I, q) ⊆ J iff I ⊆ J^[q]
  std::mt19937_64 rng(23);
  const std::int64_t qs[] = {2, 3, 4, 5, 8, 9};
  int both = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Ring r = rng() % 2 ? xy() : xyz();
    std::int64_t q = qs[rng() % 6];
    MonomialIdeal i = random_ideal(rng, r, 12), j = random_ideal(rng, r, 3);
    bool left = contains(j, bracket_root(i, q));
    CHECK(left == contains(bracket_power(j, q), i));
    CHECK(contains(bracket_power(bracket_root(i, q), q), i));
    both += left;
  }
  CHECK(both > 0);
}

TEST_CASE("minimal primes and symbolic powers") {
  Ring r = xyz();
  MonomialIdeal tri = parse_ideal(r, "(x*y, y*z, z*x)");
  CHECK(minimal_primes(tri) == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(minimal_primes(parse_ideal(r, "(x)")) == std::vector<std::vector<std::size_t>>{{0}});
  CHECK(minimal_primes(parse_ideal(r, "(x*y)")) == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK(kind_of([&] { minimal_primes(parse_ideal(r, "(x^2)")); }) == ErrorKind::NotSquarefree);

  MonomialIdeal s2 = symbolic_power(tri, 2);
  CHECK(member(s2, parse_monomial(*r, "x*y*z")));
  CHECK_FALSE(member(power(tri, 2), parse_monomial(*r, "x*y*z")));
  CHECK(contains(power(tri, 2), symbolic_power(tri, 4)));
  CHECK(symbolic_power(tri, 0).is_unit());
  CHECK(symbolic_power(tri, 1) == tri);
  // independent: intersection of prime powers
  MonomialIdeal expected = power(prime_ideal(r, {0, 1}), 3);
  expected = intersect(expected, power(prime_ideal(r, {0, 2}), 3));
  expected = intersect(expected, power(prime_ideal(r, {1, 2}), 3));
  CHECK(symbolic_power(tri, 3) == expected);
}

TEST_CASE("property: ordinary powers lie in symbolic powers") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    Ring r = xyz();
    auto pts = oracle::random_points(rng, 3, 1 + static_cast<int>(rng() % 4), 1);
    MonomialIdeal a = oracle::ideal_of(r, pts);
    int n = 1 + static_cast<int>(rng() % 3);
    CHECK(contains(symbolic_power(a, n), power(a, n)));
    MonomialIdeal direct = MonomialIdeal::unit(r);
    bool first = true;
    for (const auto& p : minimal_primes(a)) {
      MonomialIdeal pn = power(prime_ideal(r, p), n);
      direct = first ? pn : intersect(direct, pn);
      first = false;
    }
    CHECK(symbolic_power(a, n) == direct);
  }
}

TEST_CASE("analytic spread") {
  Ring r2 = xy(), r3 = xyz();
  CHECK(analytic_spread(parse_ideal(r2, "(x^2, y^3)")) == 2);
  CHECK(analytic_spread(parse_ideal(r2, "(x)")) == 1);
  CHECK(analytic_spread(parse_ideal(r3, "(x*y, y*z, z*x)")) == 3);
  CHECK(spread_bound_h(parse_ideal(r3, "(x*y, y*z, z*x)")) == 2);
  CHECK(spread_bound_h(parse_ideal(r3, "(x)")) == 1);
  CHECK(spread_bound_h(parse_ideal(r3, "(x*y)")) == 1);
}

TEST_CASE("property: analytic spread matches the growth of the number of generators of a^n") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Ring r = xy();
    auto pts = oracle::minimal(oracle::random_points(rng, 2, 1 + static_cast<int>(rng() % 4), 6));
    CHECK(analytic_spread(oracle::ideal_of(r, pts)) == oracle::spread_by_growth(pts));
  }
}

TEST_CASE("property: generators form an antichain") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal a = random_ideal(rng, xyz(), 8);
    const auto& g = a.generators();
    CHECK(std::is_sorted(g.begin(), g.end()));
    for (const auto& u : g)
      for (const auto& v : g)
        if (u != v) CHECK_FALSE(u.divides(v));
  }
}
