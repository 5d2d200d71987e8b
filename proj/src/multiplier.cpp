#include "multideal/multiplier.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "multideal/errors.hpp"
#include "multideal/linalg.hpp"

namespace multideal {

namespace {

// Calls fn on every lattice point of [0, upper] in odometer order, so a point
// is visited after everything it dominates.
void for_each_box_point(const AmbientRing& ring, const std::vector<std::int64_t>& upper,
                        const std::function<void(const ExponentVector&)>& fn) {
  const std::size_t d = ring.dimension();
  ExponentVector w(d);
  while (true) {
    if (ring.in_lattice(w)) fn(w);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (w[i] < upper[i]) {
        ++w[i];
        break;
      }
      w[i] = 0;
      if (i == 0) return;
    }
  }
}

std::vector<std::int64_t> scan_bounds(const AmbientRing& ring, const RationalVector& vertex_max) {
  std::vector<std::int64_t> upper;
  for (const auto& v : vertex_max)
    upper.push_back(checked_add(to_int64(ceil(v)), ring.lattice_period()) );
  return upper;
}

void check_ring_supported(const AmbientRing& ring) {
  if (ring.kind() == RingKind::Toric && ring.a2n_parameter() == 0)
    throw Error(ErrorKind::UnsupportedAmbient, ring.describe());
}

}  // namespace

MonomialIdeal interior_lattice_ideal(const Ring& ring, const NewtonPolyhedron& p) {
  check_ring_supported(*ring);
  if (p.dimension() != ring->dimension()) throw Error(ErrorKind::DimensionMismatch, "polyhedron vs ring");
  const auto upper = scan_bounds(*ring, p.vertex_maxima());
  InteriorTester tester(p, ring->gorenstein_vector());
  std::vector<ExponentVector> found;
  for_each_box_point(*ring, upper, [&](const ExponentVector& w) {
    for (const auto& f : found)
      if (f.divides(w)) return;
    if (tester.inside(w)) found.push_back(w);
  });
  // the box is large enough only if membership is stable under the semigroup on its boundary
  for_each_box_point(*ring, upper, [&](const ExponentVector& w) {
    bool boundary = false;
    for (std::size_t i = 0; i < w.dimension(); ++i) boundary |= w[i] == upper[i];
    if (!boundary || !tester.inside(w)) return;
    for (const auto& g : ring->presentation())
      if (!tester.inside(w + g))
        throw Error(ErrorKind::InvariantViolation, "interior test not monotone at " + w.to_string());
  });
  if (found.empty()) throw Error(ErrorKind::InvariantViolation, "no lattice point in the scan box");
  return MonomialIdeal(ring, std::move(found));
}

MonomialIdeal multiplier_ideal(const Ring& ring, const std::vector<Factor>& factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidParameter, "multiplier ideal of no factors");
  std::optional<NewtonPolyhedron> total;
  for (const auto& f : factors) {
    require_same_ring(*ring, *f.ideal.ring());
    if (f.exponent <= 0) throw Error(ErrorKind::NonpositiveExponent, f.exponent.get_str());
    NewtonPolyhedron scaled = scale(newton_polyhedron(f.ideal), f.exponent);
    total = total ? minkowski_sum(*total, scaled) : scaled;
  }
  return interior_lattice_ideal(ring, *total);
}

MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& t) {
  return multiplier_ideal(a.ring(), {Factor{a, t}});
}

MonomialIdeal mixed_multiplier_ideal(const MonomialIdeal& a, const Rational& t, const MonomialIdeal& b,
                                     const Rational& s) {
  return multiplier_ideal(a.ring(), {Factor{a, t}, Factor{b, s}});
}

Rational lct(const MonomialIdeal& a) {
  if (a.is_unit()) throw Error(ErrorKind::UnitIdeal, "lct of the unit ideal");
  NewtonPolyhedron p = newton_polyhedron(a);
  std::optional<Rational> best;
  for (const auto& f : p.facets()) {
    if (f.offset <= 0) continue;
    Rational v = dot(f.normal, a.ring()->gorenstein_vector()) / f.offset;
    if (!best || v < *best) best = v;
  }
  if (!best) throw Error(ErrorKind::InvariantViolation, "proper ideal without a bounded facet");
  return *best;
}

MonomialIdeal summation_lhs(const MonomialIdeal& a, const MonomialIdeal& b, const Rational& t) {
  return multiplier_ideal(sum(a, b), t);
}

std::vector<Rational> BreakpointSchedule::interior_points() const {
  if (points.size() <= 2) return {};
  return std::vector<Rational>(points.begin() + 1, points.end() - 1);
}

const MonomialIdeal& BreakpointSchedule::ideal_at(const Rational& lambda) const {
  if (lambda < 0 || lambda > t) throw Error(ErrorKind::InvalidParameter, "lambda outside [0, t]");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (lambda == points[i]) return point_ideals[i];
    if (i + 1 < points.size() && lambda < points[i + 1]) return open_ideals[i];
  }
  return point_ideals.back();
}

SummationResult summation_rhs(const MonomialIdeal& a, const MonomialIdeal& b, const Rational& t) {
  require_same_ring(*a.ring(), *b.ring());
  if (t <= 0) throw Error(ErrorKind::NonpositiveExponent, t.get_str());
  const Ring& ring = a.ring();
  check_ring_supported(*ring);
  NewtonPolyhedron p = newton_polyhedron(a), q = newton_polyhedron(b);
  SumMembershipSystem system(p, q, t);

  // every λP + (t-λ)Q has its vertices below the larger of tP, tQ coordinatewise
  RationalVector vmax = scale(p, t).vertex_maxima();
  RationalVector vq = scale(q, t).vertex_maxima();
  for (std::size_t i = 0; i < vmax.size(); ++i) vmax[i] = std::max(vmax[i], vq[i]);
  const auto upper = scan_bounds(*ring, vmax);
  const RationalVector& shift = ring->gorenstein_vector();

  std::vector<std::pair<ExponentVector, LambdaSet>> live;
  std::vector<Rational> raw{Rational(0), t};
  for_each_box_point(*ring, upper, [&](const ExponentVector& w) {
    RationalVector x = w.to_rational();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += shift[i];
    LambdaSet s = system.strict_set(x);
    if (s.empty) return;
    raw.push_back(s.lo);
    raw.push_back(s.hi);
    live.emplace_back(w, s);
  });
  if (live.empty()) throw Error(ErrorKind::InvariantViolation, "summation scan found nothing");

  std::vector<ExponentVector> all;
  for (const auto& [w, s] : live) all.push_back(w);
  MonomialIdeal rhs(ring, std::move(all));

  // spot-check the minimal generators against explicitly built sum polyhedra
  std::map<Rational, NewtonPolyhedron> built;
  for (const auto& [w, s] : live) {
    if (!std::binary_search(rhs.generators().begin(), rhs.generators().end(), w)) continue;
    Rational lambda = s.sample();
    auto it = built.find(lambda);
    if (it == built.end()) it = built.emplace(lambda, weighted_sum(p, q, t, lambda)).first;
    RationalVector x = w.to_rational();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += shift[i];
    if (!contains_interior(it->second, x))
      throw Error(ErrorKind::InvariantViolation, "summation generator " + w.to_string() + " fails at lambda " + lambda.get_str());
  }

  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  auto ideal_at = [&](const Rational& lambda) {
    std::vector<ExponentVector> g;
    for (const auto& [w, s] : live)
      if (s.contains(lambda)) g.push_back(w);
    if (g.empty()) throw Error(ErrorKind::InvariantViolation, "empty piece at lambda " + lambda.get_str());
    return MonomialIdeal(ring, std::move(g));
  };
  std::vector<MonomialIdeal> at_points, on_gaps;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    at_points.push_back(ideal_at(raw[i]));
    if (i + 1 < raw.size()) on_gaps.push_back(ideal_at((raw[i] + raw[i + 1]) / 2));
  }

  BreakpointSchedule schedule{t, {raw.front()}, {at_points.front()}, {}};
  for (std::size_t i = 1; i < raw.size(); ++i) {
    bool last = i + 1 == raw.size();
    if (!last && on_gaps[i - 1] == at_points[i] && at_points[i] == on_gaps[i]) continue;  // no change here
    schedule.open_ideals.push_back(on_gaps[i - 1]);
    schedule.points.push_back(raw[i]);
    schedule.point_ideals.push_back(at_points[i]);
  }

  MonomialIdeal pieces = schedule.point_ideals.front();
  for (const auto& i : schedule.point_ideals) pieces = sum(pieces, i);
  for (const auto& i : schedule.open_ideals) pieces = sum(pieces, i);
  if (!(pieces == rhs)) throw Error(ErrorKind::InvariantViolation, "schedule pieces do not add up to the summation ideal");
  return SummationResult{std::move(rhs), std::move(schedule)};
}

}  // namespace multideal
