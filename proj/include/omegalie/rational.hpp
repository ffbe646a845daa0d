#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace omegalie {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rat = mpq_class;

/// Parses "p", "p/q" or "-p/q" (surrounding whitespace allowed). Throws
/// Error(ParseError) on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when q = 1. The sign is carried by the numerator.
std::string format_rat(const Rat& value);

inline double to_double(const Rat& value) { return value.get_d(); }

/// Best rational approximation of `x` whose denominator does not exceed
/// `max_denominator` (continued-fraction convergents plus the last
/// admissible semiconvergent).
Rat rationalize(double x, long max_denominator);

}  // namespace omegalie
