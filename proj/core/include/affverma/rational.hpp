#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace affverma {

/// Arbitrary-precision rational; every coefficient in the library is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

/// Normalized "p/q" text form. The denominator is always present ("3/1").
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on bad input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace affverma
