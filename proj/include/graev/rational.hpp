#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace graev {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
Rational ratio(const Integer& num, const Integer& den);

/// Parses "n", "p/q" or a plain decimal such as "-0.05". Throws InputError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// 2^bits as an integer.
Integer pow2(unsigned bits);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Rational bounds lo <= sqrt(q) <= hi with hi - lo <= 2^-bits. q must be >= 0.
struct SqrtEnclosure {
  Rational lo;
  Rational hi;
  bool exact = false;
};
SqrtEnclosure sqrt_enclosure(const Rational& q, unsigned bits = 200);

/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& z);

}  // namespace graev
