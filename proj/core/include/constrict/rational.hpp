#pragma once

#include <gmpxx.h>

#include <string>

namespace constrict {

/// Exact rational number. All probabilistic quantities in the library are
/// carried as canonical rationals; floating point appears only in the
/// entropy maximizer and in display renderings.
using Rational = mpq_class;

/// Parse "a/b", an integer "a", or a plain decimal such as "0.35" into a
/// canonical rational. Throws ValidationError on malformed input or zero
/// denominators.
Rational parse_rational(const std::string& text);

/// Canonical serialization: "a/b" in lowest terms, or "a" when the
/// denominator is 1. Inverse of parse_rational on its output.
std::string to_string(const Rational& q);

/// Display-only decimal rendering with up to `significant` significant
/// digits (default 12), computed by exact integer division so the output is
/// platform-independent. Trailing zeros are trimmed.
std::string decimal_string(const Rational& q, int significant = 12);

}  // namespace constrict
