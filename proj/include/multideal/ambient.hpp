#pragma once

// Ambient rings: polynomial rings k[x_1..x_d] and normal toric rings written
// as invariant rings of a finite abelian group acting diagonally on k[u_1..u_d].
// In both cases the dual cone is the positive orthant of R^d and the monomials
// are the points of a lattice M ⊆ Z^d cut out by congruences. Divisibility of
// monomials is therefore the componentwise order.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multideal/geometry.hpp"

namespace multideal {

enum class RingKind { Polynomial, Toric };

/// Σ coeffs_i a_i ≡ 0 (mod modulus).
struct Congruence {
  std::vector<std::int64_t> coeffs;
  std::int64_t modulus;
};

/// A single binomial relation among presentation variables: Π x^lhs = Π x^rhs.
struct BinomialRelation {
  std::vector<std::int64_t> lhs;
  std::vector<std::int64_t> rhs;
};

class AmbientRing {
 public:
  RingKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }

  /// Names of the presentation variables (for polynomial rings, the coordinates).
  const std::vector<std::string>& variables() const { return variables_; }
  /// Lattice point each presentation variable maps to.
  const std::vector<ExponentVector>& presentation() const { return presentation_; }
  const std::optional<BinomialRelation>& relation() const { return relation_; }

  const std::vector<Congruence>& congruences() const { return congruences_; }
  /// Primitive ray generators of σ in N, one per coordinate axis.
  const std::vector<IntegerVector>& rays() const { return rays_; }
  /// Generators of σ^∨ as recession rays for Newton polyhedra.
  const std::vector<IntegerVector>& dual_cone_rays() const { return dual_rays_; }
  const RationalVector& gorenstein_vector() const { return m_sigma_; }
  /// lcm of the congruence moduli; every M-coset meets [0, L)^d.
  std::int64_t lattice_period() const { return period_; }
  /// n for the A_{2n} family, 0 otherwise.
  int a2n_parameter() const { return a2n_; }

  bool in_lattice(const ExponentVector& v) const;
  bool in_semigroup(const ExponentVector& v) const;

  /// Minimal semigroup elements that are componentwise >= lower, ascending.
  std::vector<ExponentVector> lift(const ExponentVector& lower) const;

  /// Monomial text for a semigroup element, in presentation variables.
  std::string format_monomial(const ExponentVector& v) const;
  /// Presentation-variable exponents of the normal form of v.
  std::vector<std::int64_t> normal_form(const ExponentVector& v) const;
  /// Lattice point of x_0^e_0 ... x_k^e_k.
  ExponentVector evaluate(const std::vector<std::int64_t>& presentation_exponents) const;

  /// "poly x,y,z" or "A2n n=2".
  std::string describe() const;

  bool operator==(const AmbientRing& other) const;

 private:
  friend std::shared_ptr<const AmbientRing> make_polynomial_ring(const std::vector<std::string>&);
  friend std::shared_ptr<const AmbientRing> make_A2n(int);
  AmbientRing() = default;
  void validate() const;

  RingKind kind_ = RingKind::Polynomial;
  std::size_t dimension_ = 0;
  std::vector<std::string> variables_;
  std::vector<ExponentVector> presentation_;
  std::optional<BinomialRelation> relation_;
  std::vector<Congruence> congruences_;
  std::vector<IntegerVector> rays_;
  std::vector<IntegerVector> dual_rays_;
  RationalVector m_sigma_;
  std::int64_t period_ = 1;
  int a2n_ = 0;
};

using Ring = std::shared_ptr<const AmbientRing>;

Ring make_polynomial_ring(const std::vector<std::string>& variables);

/// k[x,y,z]/(xy - z^{2n+1}) as the invariant ring of μ_{2n+1} acting on k[u,v] with weights (1,-1).
Ring make_A2n(int n);

/// Parses "poly x,y,z" or "A2n n=2" (a leading "ring " is accepted).
Ring parse_ring(std::string_view text);

/// Throws AmbientMismatch unless both rings are the same.
void require_same_ring(const AmbientRing& a, const AmbientRing& b);

}  // namespace multideal
