#pragma once

// Characteristic-p side: test ideals as stabilized Frobenius-root chains and
// a finite-level a^t-tight-closure membership search. Polynomial rings only.

#include <optional>
#include <vector>

#include "multideal/ideal.hpp"

namespace multideal {

/// v ∈ a^n, decided without expanding a^n.
bool power_contains(const MonomialIdeal& a, std::int64_t n, const ExponentVector& v);

/// (a^{⌈t q⌉})^{[1/q]}.
MonomialIdeal frobenius_level_ideal(const MonomialIdeal& a, const Rational& t, std::int64_t q);

struct ChainResult {
  MonomialIdeal ideal;
  int stabilized_at_e;
  /// levels[e] = (a^{⌈t p^e⌉})^{[1/p^e]}
  std::vector<MonomialIdeal> levels;
};

/// Multiplicative order of p modulo m (1 when m = 1).
int multiplicative_order(std::int64_t p, std::int64_t m);

/// Iterates e = 0, 1, ... until the level ideal reaches J(a^t), which bounds
/// every level from above; stabilized_at_e is the first such e.
/// Throws DenominatorDivisibleByP, NotPolynomialAmbient, NonStabilized.
ChainResult test_ideal_chain(const MonomialIdeal& a, const Rational& t, std::int64_t p, int e_max = 12);

struct TightClosureResult {
  bool member = false;
  /// The multiplier c when member.
  std::optional<ExponentVector> multiplier;
  /// Largest q = p^e checked.
  std::int64_t q_max = 1;
};

/// Searches for c with |c| <= degree_bound and c·z^q·a^{⌈tq⌉} ⊆ I^{[q]} for q = p, ..., p^{e_max}.
/// Throws SearchBudgetExceeded if a^{⌈tq⌉} becomes too large to enumerate.
TightClosureResult tight_closure_membership(std::int64_t p, const ExponentVector& z, const MonomialIdeal& ideal,
                                            const MonomialIdeal& a, const Rational& t, int e_max, int degree_bound);

}  // namespace multideal
