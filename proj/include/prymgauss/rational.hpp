#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace prymgauss {

using Integer = mpz_class;

/// Exact rational scalar. GMP keeps every value in canonical form
/// (positive denominator, reduced, zero as 0/1) after each operation.
using Rational = mpq_class;

/// Parses "p" or "p/q" with an optional leading minus sign (ASCII '-' or
/// U+2212). Rejects whitespace, '+', decimal points, exponents and zero
/// denominators with std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Decimal "p" or "p/q" in canonical form.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Returns the canonical representative of num/den. Idempotent.
Rational make_rational(const Integer& num, const Integer& den);

}  // namespace prymgauss
