#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace curvefol {

// Always canonical: gmp keeps mpq values in lowest terms with a positive
// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "p", "-p", "p/q". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace curvefol
