#include "dunklbi/jacobi.hpp"

#include <stdexcept>

namespace dunklbi {

namespace {

// (a)_k with a zero-factor guard for denominator use.
Rational pochhammer_nonzero(const Rational& a, int k) {
    Rational out = 1;
    Rational term = a;
    for (int i = 0; i < k; ++i) {
        if (term == 0) throw std::domain_error("jacobi: Pochhammer zero in a denominator");
        out *= term;
        term += 1;
    }
    return out;
}

}  // namespace

Rational JacobiPoly::evaluate(const Rational& x) const {
    Rational out = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * x + *it;
    return out;
}

JacobiPoly jacobi(int nn, const Rational& alpha, const Rational& beta) {
    if (nn < 0) throw std::invalid_argument("jacobi: negative degree");
    JacobiPoly p;
    p.degree = nn;
    p.alpha = alpha;
    p.beta = beta;
    p.coeffs.assign(nn + 1, Rational(0));

    const Rational lead = pochhammer(alpha + 1, nn) / factorial_rational(nn);
    for (int k = 0; k <= nn; ++k) {
        const Rational term = pochhammer(Rational(-nn), k) * pochhammer(nn + alpha + beta + 1, k) /
                              (pochhammer_nonzero(alpha + 1, k) * factorial_rational(k));
        // ((1 - x)/2)^k expanded binomially
        Rational binom = 1;
        for (int i = 0; i <= k; ++i) {
            const Rational c = term * binom * rational_pow(Rational(-1), i) /
                               rational_pow(Rational(2), k);
            p.coeffs[i] += lead * c;
            binom = binom * (k - i) / (i + 1);
        }
    }
    return p;
}

LaurentPoly homogenized_jacobi(int nn, const Rational& alpha, const Rational& beta) {
    if (nn < 0) return LaurentPoly::zero(2);
    const Rational lead = pochhammer(alpha + 1, nn) / factorial_rational(nn);
    LaurentPoly out = LaurentPoly::zero(2);
    for (int k = 0; k <= nn; ++k) {
        const Rational c = lead * pochhammer(Rational(-nn), k) * pochhammer(Rational(-nn) - beta, k) *
                           rational_pow(Rational(-1), k) /
                           (pochhammer_nonzero(alpha + 1, k) * factorial_rational(k));
        out += LaurentPoly::monomial({nn - k, k}, c);
    }
    return out;
}

LaurentPoly substitute_bivariate(const LaurentPoly& f, const LaurentPoly& x_value,
                                 const LaurentPoly& y_value) {
    if (f.dim() != 2) throw std::invalid_argument("substitute_bivariate: expected a bivariate input");
    if (x_value.dim() != y_value.dim())
        throw std::invalid_argument("substitute_bivariate: substitution dimension mismatch");
    const int dim = x_value.dim();

    int max_x = 0, max_y = 0;
    for (const auto& [e, c] : f.terms()) {
        if (e[0] < 0 || e[1] < 0)
            throw std::invalid_argument("substitute_bivariate: negative exponents unsupported");
        max_x = std::max(max_x, e[0]);
        max_y = std::max(max_y, e[1]);
    }
    std::vector<LaurentPoly> xp{LaurentPoly::constant(dim, 1)}, yp{LaurentPoly::constant(dim, 1)};
    for (int i = 1; i <= max_x; ++i) xp.push_back(xp.back() * x_value);
    for (int i = 1; i <= max_y; ++i) yp.push_back(yp.back() * y_value);

    LaurentPoly out = LaurentPoly::zero(dim);
    for (const auto& [e, c] : f.terms()) out += xp[e[0]] * yp[e[1]] * c;
    return out;
}

}  // namespace dunklbi
