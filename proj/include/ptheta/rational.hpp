#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ptheta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Accepts "p", "p/q" and terminating decimals such as "0.125" or "-2.5".
/// Throws std::invalid_argument otherwise (including zero denominators).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers are written without "/1".
std::string format_rational(const Rational& q);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

Integer floor_div(const Rational& q);
/// q - floor(q), in [0, 1).
Rational frac(const Rational& q);

Rational pow(const Rational& base, unsigned long e);

/// n/d in canonical form; d must be nonzero.
Rational ratio(long n, long d);

}  // namespace ptheta
