#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ifree {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p". Rejects zero, negative and non-reduced denominators.
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q" with q > 1, or "p".
std::string to_string(const Rational& value);

Integer factorial(int n);
Integer binomial(int n, int k);
Integer catalan(int n);

}  // namespace ifree
