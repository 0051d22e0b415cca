#ifndef DUNKLBI_OPERATOR_EXPR_HPP
#define DUNKLBI_OPERATOR_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "dunklbi/laurent.hpp"
#include "dunklbi/params.hpp"

namespace dunklbi {

// Linear-operator expression over the generator atoms: multiplication by a
// variable or its inverse, partial derivative, reflection, scalar, identity,
// combined by sums, compositions and rational scalings. Values are immutable;
// application is linear in the input polynomial.
class OperatorExpr {
  public:
    enum class Tag { identity, scalar, mul_var, inv_var, partial, reflect, sum, compose, scale };

    static OperatorExpr identity();
    static OperatorExpr scalar(const Rational& c);
    static OperatorExpr mul_var(int axis);
    static OperatorExpr inv_var(int axis);
    static OperatorExpr partial(int axis);
    static OperatorExpr reflect(int axis);
    static OperatorExpr sum(std::vector<OperatorExpr> terms);
    // compose(after, first): `first` acts on the input, then `after`.
    static OperatorExpr compose(OperatorExpr after, OperatorExpr first);
    static OperatorExpr scale(const Rational& c, OperatorExpr e);

    // a * b is composition (b acts first); a + b and a - b are sums.
    friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
        return compose(a, b);
    }
    friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
        return sum({a, b});
    }
    friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) {
        return sum({a, scale(Rational(-1), b)});
    }

    LaurentPoly apply(const LaurentPoly& p) const;

    // Canonical prefix-notation rendering with atoms x_i, 1/x_i, d_i, R_i.
    std::string render() const;

    Tag tag() const;

    struct Node;

  private:
    using NodePtr = std::shared_ptr<const Node>;
    explicit OperatorExpr(NodePtr node) : node_(std::move(node)) {}

    NodePtr node_;

    friend OperatorExpr gauge_conjugate(const OperatorExpr&, const ModelParams&);
};

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr op_pow(const OperatorExpr& a, int k);

// Conjugation by G = prod_i |s_i|^{mu_i}: partial_i becomes
// partial_i + mu_i / s_i; multiplications, reflections and scalars are fixed.
// Homomorphic over sums, compositions and scalings.
OperatorExpr gauge_conjugate(const OperatorExpr& op, const ModelParams& params);

// Monomials of total degree 0..max_degree in n variables (non-negative
// exponents), enumerated degree by degree; within one degree the last axis
// varies slowest, so s_1^d comes first.
std::vector<ExponentVector> monomials_up_to_degree(int n, int max_degree);
std::vector<ExponentVector> monomials_of_degree(int n, int degree);

// Outcome of comparing two operators on a spanning monomial set.
struct EqualityWitness {
    enum class Kind { equal, images_differ, nonpolynomial_image };
    Kind kind = Kind::equal;
    ExponentVector monomial;   // first offending monomial (sweep order)
    LaurentPoly lhs_image{1};
    LaurentPoly rhs_image{1};

    bool ok() const { return kind == Kind::equal; }
    std::string describe() const;
};

// Applies a and b to every monomial s^alpha, 0 <= |alpha| <= max_degree, and
// compares images exactly. With require_polynomial_images, both images must
// also be free of negative exponents. The sweep parallelizes over monomials;
// the reported counterexample is always the first one in sweep order.
EqualityWitness equal_on_degree(const OperatorExpr& a, const OperatorExpr& b, int dim,
                                int max_degree, bool require_polynomial_images = false);

}  // namespace dunklbi

#endif
