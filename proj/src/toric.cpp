#include "multideal/toric.hpp"

#include "multideal/errors.hpp"

namespace multideal {

MonomialIdeal jacobian_ideal(const Ring& ring, std::int64_t characteristic) {
  if (characteristic < 0 || (characteristic > 0 && !is_prime(characteristic)))
    throw Error(ErrorKind::NotPrime, "characteristic " + std::to_string(characteristic));
  if (ring->kind() == RingKind::Polynomial) return MonomialIdeal::unit(ring);
  const auto& rel = ring->relation();
  if (!rel) throw Error(ErrorKind::UnsupportedPresentation, ring->describe() + " has no binomial presentation");
  // f = X^lhs - X^rhs; ∂f/∂X_j = lhs_j X^{lhs - e_j} - rhs_j X^{rhs - e_j}
  std::vector<ExponentVector> gens;
  for (std::size_t j = 0; j < rel->lhs.size(); ++j) {
    std::int64_t a = rel->lhs[j], b = rel->rhs[j];
    if (a != 0 && b != 0) throw Error(ErrorKind::UnsupportedPresentation, "partial derivative is not a monomial");
    if (a == 0 && b == 0) continue;
    std::int64_t coeff = a != 0 ? a : b;
    if (characteristic > 0 && coeff % characteristic == 0)
      throw Error(ErrorKind::CharacteristicDividesCoefficient,
                  "coefficient " + std::to_string(coeff) + " of d/d" + ring->variables()[j] + " vanishes in characteristic " +
                      std::to_string(characteristic));
    std::vector<std::int64_t> e = a != 0 ? rel->lhs : rel->rhs;
    --e[j];
    gens.push_back(ring->evaluate(e));
  }
  if (gens.empty()) throw Error(ErrorKind::UnsupportedPresentation, "constant relation");
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal divisorial_symbolic_power(const Ring& ring, std::size_t ray_index, std::int64_t n) {
  if (ray_index >= ring->rays().size())
    throw Error(ErrorKind::RayOutOfRange, "ray " + std::to_string(ray_index) + " of " + ring->describe());
  if (n < 0) throw Error(ErrorKind::NonpositivePower, "divisorial power " + std::to_string(n));
  if (n == 0) return MonomialIdeal::unit(ring);
  // rays are coordinate axes here, so the valuation is one coordinate
  const auto& ray = ring->rays()[ray_index];
  ExponentVector lower(ring->dimension());
  for (std::size_t i = 0; i < ring->dimension(); ++i)
    if (ray[i] != 0) lower[i] = to_int64(ceil(make_rational(Integer(static_cast<long>(n)), ray[i])));
  return MonomialIdeal(ring, ring->lift(lower));
}

}  // namespace multideal
