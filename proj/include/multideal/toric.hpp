#pragma once

// Ring-level ideals: the Jacobian ideal of a presentation and the valuation
// ideals of the torus-invariant divisors.

#include <cstdint>

#include "multideal/ideal.hpp"

namespace multideal {

/// Jacobian ideal of the ring over its ground field of the given characteristic (0 for characteristic zero).
/// Polynomial rings give the unit ideal. Throws UnsupportedPresentation or CharacteristicDividesCoefficient.
MonomialIdeal jacobian_ideal(const Ring& ring, std::int64_t characteristic = 0);

/// {u : ⟨u, n_i⟩ >= n} for the i-th ray of σ.
MonomialIdeal divisorial_symbolic_power(const Ring& ring, std::size_t ray_index, std::int64_t n);

}  // namespace multideal
