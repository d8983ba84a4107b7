#pragma once

#include <gmpxx.h>

#include <string>

namespace besselcross {

// Exact arbitrary-size rational, always canonical (reduced, positive
// denominator). All exact bookkeeping in the project runs on this type.
using Rat = mpq_class;
using Int = mpz_class;

/// Reduced rational n/d. d must be nonzero.
Rat rat(long n, long d);
Rat rat(const Int &n, const Int &d);

/// Parses "p/q", plain integers, exact decimal/scientific literals
/// ("0.01", "1e-20", "-3.5e2") and power forms ("2^-64"). Decimal input is
/// converted exactly, never through binary floating point.
Rat rat_from_string(const std::string &s);

/// base^exp with exp possibly negative (then base must be nonzero).
Rat rat_pow(const Rat &base, long exp);

Int factorial(unsigned long n);

/// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat &q);

/// Fixed-point decimal rendering with `digits` fractional digits,
/// round-half-even. Deterministic; used by every output format.
std::string decimal_string(const Rat &q, int digits);

} // namespace besselcross
