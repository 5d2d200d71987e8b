#include "multideal/instances.hpp"

#include "multideal/errors.hpp"

namespace multideal {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

void validate(const InstanceSpec& spec) {
  if (!spec.ring) throw Error(ErrorKind::InvalidSpec, "no ring");
  if (spec.ring->variables().size() > 3) throw Error(ErrorKind::InvalidSpec, "at most 3 variables");
  if (spec.max_generators < 1 || spec.max_generators > 6) throw Error(ErrorKind::InvalidSpec, "generator count must be in [1, 6]");
  if (spec.max_exponent < 1 || spec.max_exponent > 8) throw Error(ErrorKind::InvalidSpec, "max exponent must be in [1, 8]");
  if (spec.max_denominator < 1 || spec.max_denominator > 12)
    throw Error(ErrorKind::InvalidSpec, "denominators must be in [1, 12]");
  if (spec.shape == IdealShape::Squarefree && spec.ring->kind() != RingKind::Polynomial)
    throw Error(ErrorKind::InvalidSpec, "squarefree ideals need a polynomial ring");
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Ring standard_polynomial_ring(int d) {
  static const std::vector<std::string> names{"x", "y", "z"};
  if (d < 1 || d > 3) throw Error(ErrorKind::InvalidSpec, "variable count must be in [1, 3]");
  return make_polynomial_ring(std::vector<std::string>(names.begin(), names.begin() + d));
}

Rational random_exponent(std::mt19937_64& rng, int max_denominator) {
  std::int64_t den = uniform(rng, 1, max_denominator);
  std::int64_t num = uniform(rng, 1, 2 * den);
  return make_rational(num, den);
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const InstanceSpec& spec) {
  const Ring& ring = spec.ring;
  const std::size_t k = ring->variables().size();
  const std::int64_t count = uniform(rng, 1, spec.max_generators);
  std::vector<ExponentVector> gens;
  if (spec.shape == IdealShape::MPrimary) {
    if (ring->kind() != RingKind::Polynomial) throw Error(ErrorKind::InvalidSpec, "m-primary draws need a polynomial ring");
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::int64_t> e(k, 0);
      e[i] = uniform(rng, 1, spec.max_exponent);
      gens.push_back(ring->evaluate(e));
    }
  }
  while (static_cast<std::int64_t>(gens.size()) < count || gens.empty()) {
    std::vector<std::int64_t> e(k, 0);
    bool zero = true;
    for (auto& x : e) {
      x = spec.shape == IdealShape::Squarefree ? uniform(rng, 0, 1) : uniform(rng, 0, spec.max_exponent);
      zero &= x == 0;
    }
    if (zero) continue;
    gens.push_back(ring->evaluate(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

Instance generate_instance(const InstanceSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  MonomialIdeal a = random_ideal(rng, spec);
  MonomialIdeal b = spec.allow_unit_b && rng() % 8 == 0 ? MonomialIdeal::unit(spec.ring) : random_ideal(rng, spec);
  Rational t = random_exponent(rng, spec.max_denominator);
  Rational s = random_exponent(rng, spec.max_denominator);
  return Instance{spec.ring, std::move(a), std::move(b), t, s};
}

}  // namespace multideal
