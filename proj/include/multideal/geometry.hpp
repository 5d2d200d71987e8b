#pragma once

// Exact polyhedral kernel: Newton polyhedra conv(points) + cone(rays) kept in
// both V- and H-representation, with the handful of operations the
// multiplier-ideal machinery is built from.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multideal/rational.hpp"

namespace multideal {

/// Lattice point of M = Z^d (or a finite-index sublattice of it); the exponent of a monomial.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dimension) : coords_(dimension, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  ExponentVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::size_t dimension() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  std::int64_t total_degree() const;
  bool is_zero() const;
  bool is_nonnegative() const;

  /// Componentwise <=, the divisibility order x^u | x^v on a lattice with orthant cone.
  bool divides(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector operator-(const ExponentVector& other) const;
  ExponentVector scaled(std::int64_t factor) const;

  RationalVector to_rational() const;

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b);

/// ⟨x, n⟩ >= offset.
struct Facet {
  IntegerVector normal;
  Rational offset;

  bool operator==(const Facet& other) const = default;
};

/// conv(vertices) + cone(recession_rays), full-dimensional, pointed.
class NewtonPolyhedron {
 public:
  /// Convex hull of points plus the cone over rays. Throws EmptyGenerators or DegenerateCone.
  static NewtonPolyhedron from_points(std::vector<RationalVector> points, std::vector<IntegerVector> rays);

  std::size_t dimension() const { return dimension_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<IntegerVector>& recession_rays() const { return rays_; }
  const std::vector<Facet>& facets() const { return facets_; }

  /// Largest vertex coordinate along each axis.
  RationalVector vertex_maxima() const;

  bool operator==(const NewtonPolyhedron& other) const;

  std::string to_string() const;

 private:
  NewtonPolyhedron() = default;
  friend NewtonPolyhedron scale(const NewtonPolyhedron&, const Rational&);

  std::size_t dimension_ = 0;
  std::vector<RationalVector> vertices_;  // sorted
  std::vector<IntegerVector> rays_;       // sorted
  std::vector<Facet> facets_;             // sorted by normal
};

/// Generators of the positive orthant of R^d.
std::vector<IntegerVector> orthant_rays(std::size_t dimension);

NewtonPolyhedron newton_polyhedron(std::span<const ExponentVector> generators, const std::vector<IntegerVector>& rays);

NewtonPolyhedron scale(const NewtonPolyhedron& p, const Rational& t);

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q);

bool contains(const NewtonPolyhedron& p, const RationalVector& x);
bool contains_interior(const NewtonPolyhedron& p, const RationalVector& x);

/// min over P of ⟨·, n⟩; throws UnboundedDirection if n leaves the dual of the recession cone.
Rational support_value(const NewtonPolyhedron& p, const IntegerVector& n);
Rational support_value(const NewtonPolyhedron& p, const RationalVector& n);

/// Vertices recomputed from the facets alone (H -> V).
std::vector<RationalVector> vertices_from_facets(const NewtonPolyhedron& p);

/// Fast strict-interior test for lattice points shifted by a fixed vector.
/// Falls back to exact arithmetic when the data does not fit in machine words.
class InteriorTester {
 public:
  InteriorTester(const NewtonPolyhedron& p, const RationalVector& shift);
  bool inside(const ExponentVector& w) const;

 private:
  const NewtonPolyhedron* polyhedron_;
  RationalVector shift_;
  bool fast_ = false;
  // per facet: den * ⟨w, n⟩ > rhs, with rhs = num - den * ⟨shift, n⟩ folded in
  std::vector<std::vector<std::int64_t>> scaled_normals_;
  std::vector<__int128> thresholds_;
};

// ---------------------------------------------------------------------------
// Membership in λP + (t-λ)Q as λ sweeps [0, t].

/// Closed interval of rationals; `empty` encodes the empty set.
struct RationalInterval {
  bool empty = true;
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return !empty && lo <= x && x <= hi; }
  std::string to_string() const;
};

/// Interval with independently open or closed ends.
struct LambdaSet {
  bool empty = true;
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Rational& x) const;
  /// Some point of the set: midpoint when it has interior.
  Rational sample() const;
};

/// Fourier–Motzkin projection of {(u, λ, x) : u ∈ λP, x - u ∈ (t-λ)Q, 0 <= λ <= t}
/// onto (λ, x), computed once and evaluated for many x.
class SumMembershipSystem {
 public:
  SumMembershipSystem(const NewtonPolyhedron& p, const NewtonPolyhedron& q, const Rational& t);

  const Rational& t() const { return t_; }
  std::size_t row_count() const { return rows_.size(); }

  /// {λ ∈ [0,t] : x ∈ λP + (t-λ)Q}.
  RationalInterval interval(const RationalVector& x) const;

  /// {λ ∈ [0,t] : x ∈ Int(λP + (t-λ)Q)}.
  LambdaSet strict_set(const RationalVector& x) const;

 private:
  struct Row {
    Integer lambda;
    IntegerVector x;
    Integer constant;
    bool operator<(const Row& o) const;
    bool operator==(const Row& o) const;
  };
  std::size_t dimension_ = 0;
  Rational t_;
  std::vector<Row> rows_;
};

RationalInterval membership_interval(const NewtonPolyhedron& p, const NewtonPolyhedron& q, const Rational& t,
                                     const RationalVector& x);

/// λP + (t-λ)Q built as an honest polyhedron; λ = 0 and λ = t give tQ and tP.
NewtonPolyhedron weighted_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q, const Rational& t,
                              const Rational& lambda);

std::string to_string(const RationalVector& v);
std::string to_string(const IntegerVector& v);

}  // namespace multideal
