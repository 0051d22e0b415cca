#ifndef DUNKLBI_JACOBI_HPP
#define DUNKLBI_JACOBI_HPP

#include <vector>

#include "dunklbi/laurent.hpp"
#include "dunklbi/rational.hpp"

namespace dunklbi {

// Jacobi polynomial with exact rational parameters and coefficients,
// P_n^{(a,b)}(x) = ((a+1)_n / n!) * 2F1(-n, n+a+b+1; a+1; (1-x)/2).
struct JacobiPoly {
    int degree = 0;
    Rational alpha;
    Rational beta;
    std::vector<Rational> coeffs;  // ascending powers of x, size degree+1

    Rational evaluate(const Rational& x) const;
};

// Throws std::domain_error when a Pochhammer factor (alpha+1)_k in a
// denominator vanishes within the first nn terms.
JacobiPoly jacobi(int nn, const Rational& alpha, const Rational& beta);

// Homogenized two-variable form (X+Y)^nn P_nn^{(a,b)}((X-Y)/(X+Y)) =
// ((a+1)_nn/nn!) X^nn 2F1(-nn, -nn-b; a+1; -Y/X), returned as a bivariate
// polynomial in (X, Y). For nn < 0 the zero polynomial is returned, which
// absorbs the vanishing lower-degree companion terms of the closed forms.
LaurentPoly homogenized_jacobi(int nn, const Rational& alpha, const Rational& beta);

// Substitutes the bivariate polynomial f(X, Y) with arbitrary polynomials.
LaurentPoly substitute_bivariate(const LaurentPoly& f, const LaurentPoly& x_value,
                                 const LaurentPoly& y_value);

}  // namespace dunklbi

#endif
