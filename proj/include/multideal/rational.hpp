#pragma once

// Exact scalars. Everything numeric in the library is either a machine
// integer with checked arithmetic (exponents) or a GMP rational.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace multideal {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Builds num/den in lowest terms; den must be nonzero.
Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const Integer& num, const Integer& den);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Parses "7", "-3", "5/6". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Narrowing with a range check. Throws Error(Overflow).
std::int64_t to_int64(const Integer& z);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Checked machine arithmetic for exponents.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace multideal
