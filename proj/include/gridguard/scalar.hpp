#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gridguard {

// Exact rational coordinate type. GMP keeps values canonical (reduced
// fraction, positive denominator), so equality and ordering are exact and
// every predicate built on top is decision-stable.
using Scalar = mpq_class;

// Parses "3", "-7/2" or "0.125". Decimal literals convert exactly
// (e.g. "0.1" becomes 1/10). Throws ParseError on malformed input.
Scalar scalar_from_string(std::string_view text);

double scalar_to_double(const Scalar& s);

// Decimal rendering for display and serialization. Rounds half away from
// zero at `frac_digits`; trailing zeros (and a trailing '.') are trimmed,
// so the output is a deterministic function of the value.
std::string scalar_to_decimal(const Scalar& s, int frac_digits = 6);

inline int sign_of(const Scalar& s) { return sgn(s); }

}  // namespace gridguard
