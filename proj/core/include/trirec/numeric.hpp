#pragma once

/// Exact integer and rational scalars.
///
/// Integer and Rational are GMP's mpz_class and mpq_class. Every Rational
/// produced by this library is canonical: gcd(|num|, den) = 1 and den > 0.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace trirec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Default trial-division bound used by squarefree extraction.
inline constexpr unsigned long kDefaultTrialBound = 1'000'000;

/// r = s^2 * d with |d| squarefree and s >= 0. The sign of r lives in d.
struct SquarefreeDecomposition {
    Integer d;
    Rational s;
};

/// Canonical num/den. Throws DegenerateError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a" or "a/b" with optional sign. Decimal points and exponents are
/// rejected so that values stay exact.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

Rational pow(const Rational& base, std::uint64_t exponent);
Integer pow(const Integer& base, std::uint64_t exponent);

/// Writes a nonzero rational as s^2 * d. Primes up to `trial_bound` are
/// divided out; the remaining cofactor has only prime factors above the
/// bound, so it is classified exactly when it is a perfect square or smaller
/// than bound^3. Anything else raises FactorizationIncomplete.
SquarefreeDecomposition squarefree_decompose(const Rational& r,
                                             unsigned long trial_bound = kDefaultTrialBound);

/// sqrt(r) when r is the square of a rational, otherwise nullopt.
std::optional<Rational> is_rational_square(const Rational& r);

}  // namespace trirec
