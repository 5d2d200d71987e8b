#include "multideal/rational.hpp"

#include <string>

#include "multideal/errors.hpp"

namespace multideal {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::DegenerateCone: return "DegenerateCone";
    case ErrorKind::NonpositiveScale: return "NonpositiveScale";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RecessionMismatch: return "RecessionMismatch";
    case ErrorKind::UnboundedDirection: return "UnboundedDirection";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NonpositivePower: return "NonpositivePower";
    case ErrorKind::NotPolynomialAmbient: return "NotPolynomialAmbient";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateVariableName: return "DuplicateVariableName";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::UnsupportedPresentation: return "UnsupportedPresentation";
    case ErrorKind::CharacteristicDividesCoefficient: return "CharacteristicDividesCoefficient";
    case ErrorKind::RayOutOfRange: return "RayOutOfRange";
    case ErrorKind::UnsupportedAmbient: return "UnsupportedAmbient";
    case ErrorKind::NonpositiveExponent: return "NonpositiveExponent";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case ErrorKind::NonStabilized: return "NonStabilized";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotDivisibilityChain: return "NotDivisibilityChain";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "UnknownError";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidParameter, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::Overflow, "integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "exponent addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "exponent multiplication overflow");
  return r;
}

}  // namespace multideal
