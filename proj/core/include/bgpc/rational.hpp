#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bgpc {

/// Exact rational number (always canonical: reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders as "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Always renders as "p/q", including integers ("3/1").
std::string to_fraction_string(const Rational& q);

/// Parses "p", "-p", or "p/q". Throws Error(Parse) on malformed input or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace bgpc
