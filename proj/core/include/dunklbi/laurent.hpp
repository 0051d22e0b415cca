#ifndef DUNKLBI_LAURENT_HPP
#define DUNKLBI_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dunklbi/rational.hpp"

namespace dunklbi {

// Exponent vector of a Laurent monomial s_1^{a_1} ... s_n^{a_n}. Negative
// entries are allowed; the length is the ambient dimension.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& e);

// Finitely supported map ExponentVector -> Rational over a fixed dimension.
// Canonical form: no zero coefficients are ever stored, so equality is plain
// map equality and "exact zero" means an empty term map.
class LaurentPoly {
  public:
    explicit LaurentPoly(int dim);

    static LaurentPoly zero(int dim);
    static LaurentPoly constant(int dim, const Rational& c);
    static LaurentPoly monomial(ExponentVector exps, const Rational& c);
    // s_axis^power (axis is 1-based).
    static LaurentPoly variable(int dim, int axis, int power = 1);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExponentVector, Rational>& terms() const { return terms_; }

    // Coefficient of a monomial (zero when absent).
    Rational coefficient(const ExponentVector& exps) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const Rational& c) const;
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }
    LaurentPoly& operator+=(const LaurentPoly& rhs);

    bool operator==(const LaurentPoly& rhs) const = default;

    // d/ds_axis, term-wise Laurent power rule (axis 1-based).
    LaurentPoly partial(int axis) const;
    // s_axis -> -s_axis.
    LaurentPoly reflect(int axis) const;
    // Multiplication by s_axis^power (power may be negative).
    LaurentPoly mul_var(int axis, int power) const;
    // Sum of the terms of total degree m.
    LaurentPoly homogeneous_component(int m) const;
    // True iff no negative exponent appears (vacuously true for zero).
    bool is_polynomial() const;

    // Max total degree over terms; nullopt for the zero polynomial.
    std::optional<int> degree() const;
    // Degree when all terms share one total degree (zero counts as any degree).
    bool is_homogeneous() const;

    // Substitute s_axis = 0: drops terms with a positive exponent on axis.
    // Requires no negative exponent on that axis.
    LaurentPoly restrict_var_to_zero(int axis) const;

    // True if no term involves s_axis.
    bool independent_of(int axis) const;

    // Canonical text form: terms sorted lexicographically by exponent vector,
    // coefficients rendered as p/q.
    std::string to_string() const;

  private:
    void check_axis(int axis) const;
    void insert_term(ExponentVector exps, Rational c);

    int dim_;
    std::map<ExponentVector, Rational> terms_;
};

}  // namespace dunklbi

#endif
