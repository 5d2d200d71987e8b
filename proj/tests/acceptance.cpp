#include <algorithm>
// Acceptance gate: one PASS/FAIL line per criterion, each with a pinned runtime limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "multideal/asymptotic.hpp"
#include "multideal/errors.hpp"
#include "multideal/frobenius.hpp"
#include "multideal/multiplier.hpp"
#include "multideal/suites.hpp"
#include "oracles.hpp"

using namespace multideal;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few problems.
struct Tally {
  Outcome out;
  int problems = 0;
  void fail(const std::string& what) {
    out.ok = false;
    if (problems++ < 3) out.detail += (out.detail.empty() ? "" : "; ") + what;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

bool all_pass(const SuiteReport& r, Tally& tally) {
  for (const auto& x : r.results)
    if (x.verdict != Verdict::Pass)
      tally.fail(r.suite + " #" + std::to_string(x.index) + " " + x.theorem_id + " " + verdict_name(x.verdict) +
                 (x.skip_reason.empty() ? "" : " (" + x.skip_reason + ")"));
  return !r.results.empty();
}

const VerificationReport* find(const SuiteReport& r, const std::string& id, const std::string& key, const std::string& value) {
  for (const auto& x : r.results) {
    if (x.theorem_id != id) continue;
    for (const auto& [k, v] : x.instance)
      if (k == key && v == value) return &x;
  }
  return nullptr;
}

Outcome criterion_paper_example() {
  Tally t;
  for (int n : {2, 3}) {
    SuiteConfig c;
    c.n = n;
    SuiteReport r = run_suite("paper-example", c);
    all_pass(r, t);
    t.expect(r.count(Verdict::Pass) == 4, "n=" + std::to_string(n) + ": expected 4 PASS");
  }
  t.out.detail = t.out.ok ? "n=2 and n=3: 4/4 assertions each" : t.out.detail;
  return t.out;
}

Outcome criterion_tau() {
  Tally t;
  std::mt19937_64 rng(20240601);
  const Rational ts[] = {make_rational(1, 2), make_rational(2, 3), Rational(1), make_rational(3, 2)};
  const std::int64_t primes[] = {2, 3, 5, 7};
  int chains = 0, max_e = 0;
  for (int i = 0; i < 50; ++i) {
    std::size_t d = 1 + i % 3;
    std::vector<std::string> names{"x", "y", "z"};
    Ring r = make_polynomial_ring({names.begin(), names.begin() + static_cast<long>(d)});
    MonomialIdeal a = oracle::ideal_of(r, oracle::random_points(rng, d, 1 + static_cast<int>(rng() % 4), 6));
    for (const auto& tt : ts) {
      MonomialIdeal j = multiplier_ideal(a, tt);
      for (auto p : primes) {
        if (Integer(tt.get_den()) % p == 0) continue;
        try {
          ChainResult c = test_ideal_chain(a, tt, p, 12);
          max_e = std::max(max_e, c.stabilized_at_e);
          t.expect(c.ideal == j, a.to_string() + " t=" + tt.get_str() + " p=" + std::to_string(p));
        } catch (const Error& e) {
          t.fail(e.what());
        }
        ++chains;
      }
    }
  }
  if (t.out.ok) t.out.detail = std::to_string(chains) + " chains equal J, max stabilization e = " + std::to_string(max_e);
  return t.out;
}

Outcome criterion_summation() {
  Tally t;
  SuiteConfig c;
  c.seed = 42;
  c.count = 100;
  SuiteReport r = run_suite("summation", c);
  all_pass(r, t);
  t.expect(r.results.size() == 101, "expected 100 corpus instances plus the hand instance");
  Ring ring = make_polynomial_ring({"x", "y"});
  SummationResult hand = summation_rhs(parse_ideal(ring, "(x^2)"), parse_ideal(ring, "(y^3)"), 1);
  t.expect(hand.ideal.to_string() == "(x, y)", "hand rhs " + hand.ideal.to_string());
  t.expect(summation_lhs(parse_ideal(ring, "(x^2)"), parse_ideal(ring, "(y^3)"), 1).to_string() == "(x, y)", "hand lhs");
  const auto& pts = hand.schedule.points;
  for (const auto& q : {make_rational(1, 3), make_rational(1, 2), make_rational(2, 3)})
    t.expect(std::find(pts.begin(), pts.end(), q) != pts.end(), "breakpoint " + q.get_str() + " missing");
  if (t.out.ok) t.out.detail = "100/100 corpus equalities, hand instance (x, y) with breakpoints {1/3, 1/2, 2/3}";
  return t.out;
}

Outcome criterion_subadditivity() {
  Tally t;
  SuiteConfig c;
  c.count = 100;
  SuiteReport r = run_suite("subadditivity", c);
  all_pass(r, t);
  int poly = 0, toric = 0;
  for (const auto& x : r.results) {
    if (x.theorem_id != "subadditivity") continue;
    (x.instance.front().second.rfind("poly", 0) == 0 ? poly : toric)++;
  }
  t.expect(poly == 100, "polynomial instances: " + std::to_string(poly));
  t.expect(toric >= 10, "toric instances: " + std::to_string(toric));
  const auto* probe = find(r, "subadditivity-radical-probe", "ring", "A2n n=2");
  t.expect(probe && probe->expectation == Expectation::NonContainment && probe->witness && *probe->witness == "x*z",
           "radical probe must report non-containment witnessed by x*z");
  if (t.out.ok)
    t.out.detail = std::to_string(poly) + " polynomial + " + std::to_string(toric) + " toric containments, probe witness x*z";
  return t.out;
}

Outcome criterion_skoda() {
  Tally t;
  SuiteConfig c;
  c.count = 50;
  SuiteReport r = run_suite("skoda", c);
  all_pass(r, t);
  t.expect(r.results.size() == 51, "expected 50 corpus instances plus the hand instance");
  // the hand instance is appended after the corpus
  const auto* hand = r.results.empty() ? nullptr : &r.results.back();
  t.expect(hand && std::count(hand->instance.begin(), hand->instance.end(), std::pair<std::string, std::string>{"a", "(x^2, y^3)"}) == 1 && hand->lhs == "(x^3, x^2*y, x*y^3, y^4)" && hand->rhs == hand->lhs, "hand value");
  if (t.out.ok) t.out.detail = "50/50 equalities, J((x^2, y^3)^2) = (x^3, x^2*y, x*y^3, y^4)";
  return t.out;
}

Outcome criterion_symbolic() {
  Tally t;
  SuiteConfig c;
  c.count = 30;
  SuiteReport r = run_suite("symbolic", c);
  all_pass(r, t);
  std::size_t growth = 0;
  for (const auto& x : r.results) growth += x.theorem_id == "symbolic";
  t.expect(growth >= 30 * 9, "expected all (m, n) with m <= 2, n <= 3 for 30 ideals");
  bool classical = false;
  for (const auto& x : r.results)
    if (x.theorem_id == "symbolic" && x.instance[1].second == "(x*y, x*z, y*z)" && x.instance[3].second == "0" &&
        x.instance[4].second == "2")
      classical = x.verdict == Verdict::Pass;
  t.expect(classical, "a^(4) in a^2 for a = (xy, yz, zx)");
  const auto* gap = find(r, "symbolic-gap", "probe", "a^(2) vs a^2");
  t.expect(gap && gap->verdict == Verdict::Pass && gap->witness && *gap->witness == "x*y*z", "x*y*z in a^(2) \\ a^2");
  if (t.out.ok) t.out.detail = std::to_string(growth) + " containments, classical instance and x*y*z gap";
  return t.out;
}

Outcome criterion_spread() {
  Tally t;
  std::mt19937_64 rng(777);
  Ring r = make_polynomial_ring({"x", "y"});
  int spread2 = 0;
  for (int i = 0; i < 20; ++i) {
    auto pts = oracle::minimal(oracle::random_points(rng, 2, 1 + static_cast<int>(rng() % 4), 6));
    MonomialIdeal a = oracle::ideal_of(r, pts);
    int mine = analytic_spread(a), growth = oracle::spread_by_growth(pts);
    t.expect(mine == growth, a.to_string() + ": " + std::to_string(mine) + " vs " + std::to_string(growth));
    spread2 += mine == 2;
  }
  if (t.out.ok) t.out.detail = "20/20 agree (" + std::to_string(spread2) + " of spread 2)";
  return t.out;
}

Outcome criterion_properties() {
  Tally t;
  const int cases = 200;
  std::mt19937_64 rng(8);
  Ring r2 = make_polynomial_ring({"x", "y"}), r3 = make_polynomial_ring({"x", "y", "z"});
  auto ideal = [&](const Ring& r, int max_exp) {
    return oracle::ideal_of(r, oracle::random_points(rng, r->dimension(), 1 + static_cast<int>(rng() % 4), max_exp));
  };
  int hv = 0, support = 0, adjunction = 0, ascent = 0, monotone = 0, graded = 0;
  for (int i = 0; i < cases; ++i) {
    // H/V round trip
    {
      std::size_t d = 1 + i % 3;
      std::vector<ExponentVector> g;
      for (const auto& p : oracle::random_points(rng, d, 1 + static_cast<int>(rng() % 6), 12)) g.emplace_back(p);
      NewtonPolyhedron p = newton_polyhedron(std::span<const ExponentVector>(g), orthant_rays(d));
      auto back = vertices_from_facets(p);
      std::sort(back.begin(), back.end());
      bool ok = back == p.vertices() && NewtonPolyhedron::from_points(back, orthant_rays(d)) == p;
      t.expect(ok, "H/V round trip case " + std::to_string(i));
      hv += ok;
    }
    // support-function additivity
    {
      const Ring& r = i % 2 ? r2 : r3;
      NewtonPolyhedron p = newton_polyhedron(ideal(r, 8)), q = newton_polyhedron(ideal(r, 8));
      IntegerVector n(r->dimension());
      for (auto& c : n) c = static_cast<long>(rng() % 7);
      bool ok = support_value(minkowski_sum(p, q), n) == support_value(p, n) + support_value(q, n);
      t.expect(ok, "support additivity case " + std::to_string(i));
      support += ok;
    }
    // Frobenius adjunction
    {
      const Ring& r = i % 2 ? r2 : r3;
      std::int64_t q = 2 + static_cast<std::int64_t>(rng() % 8);
      MonomialIdeal a = ideal(r, 12), b = ideal(r, 3);
      bool ok = contains(b, bracket_root(a, q)) == contains(bracket_power(b, q), a);
      t.expect(ok, "adjunction case " + std::to_string(i));
      adjunction += ok;
    }
    // chain ascent
    {
      const Ring& r = i % 2 ? r2 : r3;
      const Rational ts[] = {make_rational(1, 2), make_rational(2, 3), make_rational(3, 4), make_rational(6, 5)};
      Rational tt = ts[rng() % 4];
      std::int64_t p = 7;
      ChainResult c = test_ideal_chain(ideal(r, 5), tt, p);
      bool ok = true;
      for (std::size_t e = 0; e + 1 < c.levels.size(); ++e) ok &= contains(c.levels[e + 1], c.levels[e]);
      t.expect(ok, "chain ascent case " + std::to_string(i));
      ascent += ok;
    }
    // divisibility monotonicity and graded-family law
    {
      MonomialIdeal sq = oracle::ideal_of(r3, oracle::random_points(rng, 3, 1 + static_cast<int>(rng() % 3), 1));
      Family f = i % 3 == 0   ? GradedFamily::powers(ideal(r3, 3))
                 : i % 3 == 1 ? GradedFamily::symbolic(sq)
                              : GradedFamily::sum(GradedFamily::powers(ideal(r3, 3)), GradedFamily::symbolic(sq));
      Rational tt = make_rational(1 + static_cast<std::int64_t>(rng() % 6), 1 + static_cast<std::int64_t>(rng() % 3));
      std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 2), k = 2 + static_cast<std::int64_t>(rng() % 2);
      bool mono = contains(member_multiplier(*f, m * k, tt), member_multiplier(*f, m, tt));
      t.expect(mono, "monotonicity case " + std::to_string(i));
      monotone += mono;
      int a = 1 + static_cast<int>(rng() % 4), b = 1 + static_cast<int>(rng() % 4);
      bool law = contains(f->member(a + b), product(f->member(a), f->member(b)));
      t.expect(law, "graded law case " + std::to_string(i));
      graded += law;
    }
  }
  if (t.out.ok) {
    std::ostringstream os;
    os << "H/V " << hv << ", support " << support << ", adjunction " << adjunction << ", ascent " << ascent
       << ", monotonicity " << monotone << ", graded law " << graded << " (of " << cases << " each)";
    t.out.detail = os.str();
  }
  return t.out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    long limit_ms;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "paper example on A4 and A6", 1000, criterion_paper_example},
      {2, "test ideal equals multiplier ideal", 30000, criterion_tau},
      {3, "summation formula", 30000, criterion_summation},
      {4, "subadditivity", 30000, criterion_subadditivity},
      {5, "Skoda", 10000, criterion_skoda},
      {6, "symbolic power growth", 20000, criterion_symbolic},
      {7, "analytic spread oracle", 20000, criterion_spread},
      {8, "property suites", 60000, criterion_properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    long ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    bool in_time = ms < c.limit_ms;
    bool pass = o.ok && in_time;
    failed += !pass;
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (pass ? "PASS" : "FAIL") << " (" << ms << " ms, limit "
              << c.limit_ms << " ms" << (in_time ? "" : ", TOO SLOW") << ") " << o.detail << std::endl;
  }
  std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << " (" << criteria.size() - failed << "/" << criteria.size()
            << ")" << std::endl;
  return failed ? 1 : 0;
}
