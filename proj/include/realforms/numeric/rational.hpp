#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace realforms {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact rational in "numerator/denominator" form; integers render as "n/1".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "n/d" or a bare integer "n". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
/// Nearest integer, ties rounded towards +infinity.
Integer round_of(const Rational& q);

/// Largest dyadic a/2^bits that is <= q (resp. smallest >= q).
Rational dyadic_below(const Rational& q, unsigned long bits);
Rational dyadic_above(const Rational& q, unsigned long bits);

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }

}  // namespace realforms
