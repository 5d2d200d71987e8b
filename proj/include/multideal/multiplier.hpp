#pragma once

// Multiplier ideals of monomial ideals on polynomial and toric rings:
// x^w ∈ J(a_1^{t_1} ... a_r^{t_r}) iff w + m_σ lies in the interior of Σ t_i Newt(a_i).

#include <vector>

#include "multideal/ideal.hpp"

namespace multideal {

struct Factor {
  MonomialIdeal ideal;
  Rational exponent;
};

MonomialIdeal multiplier_ideal(const Ring& ring, const std::vector<Factor>& factors);
MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& t);
/// J(a^t b^s).
MonomialIdeal mixed_multiplier_ideal(const MonomialIdeal& a, const Rational& t, const MonomialIdeal& b,
                                     const Rational& s);

/// {w : w + m_σ ∈ Int(P)} for an arbitrary Newton-type polyhedron over the ring.
MonomialIdeal interior_lattice_ideal(const Ring& ring, const NewtonPolyhedron& p);

/// Log canonical threshold of a proper ideal. Throws UnitIdeal.
Rational lct(const MonomialIdeal& a);

/// J((a+b)^t).
MonomialIdeal summation_lhs(const MonomialIdeal& a, const MonomialIdeal& b, const Rational& t);

/// Piecewise-constant λ ↦ J(a^λ b^{t-λ}) on [0, t].
struct BreakpointSchedule {
  Rational t;
  /// Strictly increasing, first 0 and last t.
  std::vector<Rational> points;
  /// Ideal at each point.
  std::vector<MonomialIdeal> point_ideals;
  /// Ideal on (points[i], points[i+1]).
  std::vector<MonomialIdeal> open_ideals;

  /// Interior breakpoints, i.e. points other than 0 and t.
  std::vector<Rational> interior_points() const;
  /// J(a^λ b^{t-λ}) read off the schedule.
  const MonomialIdeal& ideal_at(const Rational& lambda) const;
};

struct SummationResult {
  MonomialIdeal ideal;
  BreakpointSchedule schedule;
};

/// Σ_{λ+μ=t} J(a^λ b^μ), computed exactly from the per-monomial λ-intervals.
SummationResult summation_rhs(const MonomialIdeal& a, const MonomialIdeal& b, const Rational& t);

}  // namespace multideal
