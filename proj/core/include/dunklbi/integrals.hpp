#ifndef DUNKLBI_INTEGRALS_HPP
#define DUNKLBI_INTEGRALS_HPP

#include <map>
#include <string>
#include <vector>

#include "dunklbi/bigfloat.hpp"
#include "dunklbi/laurent.hpp"
#include "dunklbi/params.hpp"

namespace dunklbi {

// coeff * prod Gamma(num args) / prod Gamma(den args), kept canonical: every
// argument is shifted into (0,1] via Gamma(x+1) = x Gamma(x) with the shift
// factors folded into coeff, arguments equal to 1 are dropped, and common
// num/den arguments cancel. Two expressions with the same argument multisets
// are compared exactly through their rational coefficients.
class GammaExpr {
  public:
    GammaExpr() = default;  // zero

    static GammaExpr from_rational(const Rational& c);
    // coeff * Gamma(arg); arg must not be a non-positive integer.
    static GammaExpr gamma(const Rational& arg, const Rational& coeff = Rational(1));

    bool is_zero() const { return coeff_ == 0; }
    const Rational& coeff() const { return coeff_; }

    GammaExpr operator*(const GammaExpr& rhs) const;
    GammaExpr scale(const Rational& c) const;
    GammaExpr divide(const GammaExpr& rhs) const;

    // Same canonical Gamma-argument multisets.
    bool same_class(const GammaExpr& rhs) const;
    bool operator==(const GammaExpr& rhs) const = default;

    BigFloat value(int precision_digits) const;
    std::string to_string() const;

  private:
    void push_gamma(const Rational& arg, int multiplicity);
    void cancel_common();

    Rational coeff_ = 0;
    std::map<Rational, int> num_args_;
    std::map<Rational, int> den_args_;
};

// Sum of GammaExpr terms grouped by canonical argument class. Exactly zero
// iff every class cancels to rational coefficient zero; that decision never
// touches floating point.
class GammaSum {
  public:
    GammaSum() = default;
    explicit GammaSum(GammaExpr term);

    void add(const GammaExpr& term);
    void add(const GammaSum& other);
    GammaSum scale(const Rational& c) const;

    bool is_exactly_zero() const { return terms_.empty(); }
    const std::vector<GammaExpr>& terms() const { return terms_; }

    BigFloat value(int precision_digits) const;
    std::string to_string() const;

  private:
    std::vector<GammaExpr> terms_;  // pairwise distinct classes, nonzero
};

// Integral over the unit sphere of prod_i |s_i|^{a_i + 2 mu_i} with respect
// to the round measure: zero when any a_i is odd, otherwise
// 2 prod Gamma(b_i + 1/2) / Gamma(sum b_i + n/2) with b_i = a_i/2 + mu_i.
GammaExpr monomial_sphere_integral(const ExponentVector& a, const ModelParams& params);

// Weighted inner product of two polynomials over the sphere with weight
// prod |s_i|^{2 mu_i} (the weight the gauge factor squares to).
GammaSum inner_product(const LaurentPoly& p, const LaurentPoly& q, const ModelParams& params);

// Pairwise inner products of a family of polynomials.
std::vector<std::vector<GammaSum>> gram_matrix(const std::vector<LaurentPoly>& basis,
                                               const ModelParams& params);

}  // namespace dunklbi

#endif
