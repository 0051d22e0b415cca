#ifndef DUNKLBI_RATIONAL_HPP
#define DUNKLBI_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dunklbi {

// Exact arbitrary-precision rational scalar. mpq_class keeps values reduced
// to lowest terms with a positive denominator and 0 stored as 0/1, which is
// exactly the canonical form every module here relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// Builds a canonical rational from an integer pair; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "p/q" or "p" with optional sign. Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1. Requires k >= 0.
Rational pochhammer(const Rational& a, int k);

// n! as an exact rational. Requires n >= 0.
Rational factorial_rational(int n);

// q^e for integer e (negative allowed; q must be nonzero when e < 0).
Rational rational_pow(const Rational& q, int e);

}  // namespace dunklbi

#endif
