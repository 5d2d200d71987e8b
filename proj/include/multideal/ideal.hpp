#pragma once

// Monomial ideals over an ambient ring, stored as the antichain of minimal
// generator exponents.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multideal/ambient.hpp"
#include "multideal/geometry.hpp"

namespace multideal {

class MonomialIdeal {
 public:
  /// Minimalizes the generators. Throws ZeroIdeal on an empty list and
  /// NotInSemigroup if a generator is not a monomial of the ring.
  MonomialIdeal(Ring ring, std::vector<ExponentVector> generators);

  static MonomialIdeal unit(Ring ring);
  static MonomialIdeal principal(Ring ring, ExponentVector generator);

  const Ring& ring() const { return ring_; }
  /// Minimal generators in ascending lexicographic order.
  const std::vector<ExponentVector>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_unit() const;

  /// "(x^2, y^3)", generators in presentation-exponent order; the unit ideal prints as "(1)".
  std::string to_string() const;

  bool operator==(const MonomialIdeal& other) const;

 private:
  Ring ring_;
  std::vector<ExponentVector> generators_;
};

/// Minimal elements under componentwise order, ascending lexicographic.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> points);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// a^0 is the unit ideal; negative n throws NonpositivePower.
MonomialIdeal power(const MonomialIdeal& a, std::int64_t n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// (a : b) = {f : f·b ⊆ a}.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

/// b ⊆ a.
bool contains(const MonomialIdeal& a, const MonomialIdeal& b);
bool member(const MonomialIdeal& a, const ExponentVector& v);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);
/// A generator of b outside a, if any.
std::optional<ExponentVector> containment_witness(const MonomialIdeal& a, const MonomialIdeal& b);

struct FrobeniusLevel {
  std::int64_t p;
  int e;
  std::int64_t q;

  /// Throws NotPrime, InvalidParameter (e < 0), or Overflow (p^e beyond 64 bits).
  static FrobeniusLevel make(std::int64_t p, int e);
};

bool is_prime(std::int64_t n);

MonomialIdeal bracket_power(const MonomialIdeal& a, std::int64_t q);
/// Smallest monomial ideal J with a ⊆ J^{[q]}: generated by ⌊v/q⌋ over generators v.
MonomialIdeal bracket_root(const MonomialIdeal& a, std::int64_t q);

bool is_squarefree(const MonomialIdeal& a);

/// Minimal primes of a squarefree ideal as sorted variable-index sets.
std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& a);
MonomialIdeal prime_ideal(const Ring& ring, const std::vector<std::size_t>& variables);

/// ∩ P^n over minimal primes P; n = 0 gives the unit ideal.
MonomialIdeal symbolic_power(const MonomialIdeal& a, std::int64_t n);

/// Dimension of the fiber cone: one more than the largest dimension of a
/// compact face of the Newton polyhedron. Equals rank{(v, 1)} when the
/// generators lie on one affine hyperplane.
int analytic_spread(const MonomialIdeal& a);
/// max over minimal primes P of the analytic spread of a R_P.
int spread_bound_h(const MonomialIdeal& a);

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a);

/// Parses "(x^2, y*z, z^3)"; "(1)" is the unit ideal.
MonomialIdeal parse_ideal(const Ring& ring, std::string_view text);
/// Parses a single monomial "x^2*y" to its lattice point.
ExponentVector parse_monomial(const AmbientRing& ring, std::string_view text);

}  // namespace multideal
