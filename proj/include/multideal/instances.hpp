#pragma once

// Seeded random instances for the verification suites.

#include <cstdint>
#include <random>

#include "multideal/ideal.hpp"

namespace multideal {

enum class IdealShape { General, Squarefree, MPrimary };

struct InstanceSpec {
  std::uint64_t seed = 0;
  Ring ring;
  int max_generators = 4;  // <= 6
  int max_exponent = 6;    // <= 8; bounds presentation exponents
  int max_denominator = 12;  // <= 12
  IdealShape shape = IdealShape::General;
  bool allow_unit_b = false;
};

struct Instance {
  Ring ring;
  MonomialIdeal a;
  MonomialIdeal b;
  Rational t;
  Rational s;
};

/// Throws InvalidSpec when a bound is out of range.
void validate(const InstanceSpec& spec);

/// Fully determined by the InstanceSpec fields.
Instance generate_instance(const InstanceSpec& spec);

/// Independent per-instance seed derived from a suite seed and an index.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

/// One random ideal of the requested shape.
MonomialIdeal random_ideal(std::mt19937_64& rng, const InstanceSpec& spec);
/// num/den with den in [1, max_den] and num in [1, 2 den].
Rational random_exponent(std::mt19937_64& rng, int max_denominator);

/// "poly x" .. "poly x,y,z" for d = 1..3.
Ring standard_polynomial_ring(int d);

}  // namespace multideal
