#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunklbi/ck.hpp"
#include "dunklbi/integrals.hpp"
#include "dunklbi/jacobi.hpp"
#include "test_support.hpp"

using namespace dunklbi;

namespace {

const ModelParams params2{2, {Rational(1, 2), Rational(1, 3)}};
const ModelParams params3{3, {Rational(1, 2), Rational(1, 3), Rational(1, 4)}};

bool close(const BigFloat& a, const BigFloat& b, const Rational& tol, int digits = 50) {
    return (a - b).abs() < BigFloat(tol, BigFloat::bits_for_digits(digits));
}

// Independent oracle for the Jacobi weight: int_{-1}^{1} (1-x)^al (1+x)^be x^j dx
// expanded into Beta values 2^{al+be+1} sum_i C(j,i) (-2)^i B(al+i+1, be+1).
GammaSum jacobi_weight_moment(int j, const Rational& al, const Rational& be) {
    GammaSum out;
    Rational binom = 1;
    for (int i = 0; i <= j; ++i) {
        GammaExpr beta = GammaExpr::gamma(al + i + 1) * GammaExpr::gamma(be + 1);
        beta = beta.divide(GammaExpr::gamma(al + be + i + 2));
        Rational c = binom * rational_pow(Rational(-2), i);
        // the 2^{al+be+1} prefactor is a common nonzero constant; it is
        // irrelevant for exact-zero decisions and omitted
        out.add(beta.scale(c));
        binom = binom * (j - i) / (i + 1);
    }
    return out;
}

}  // namespace

TEST_CASE("gamma expression canonicalization") {
    // G(5/2) = (3/2)(1/2) G(1/2)
    auto g = GammaExpr::gamma(Rational(5, 2));
    auto h = GammaExpr::gamma(Rational(1, 2), Rational(3, 4));
    CHECK(g == h);
    // G(3) = 2
    CHECK(GammaExpr::gamma(Rational(3)) == GammaExpr::from_rational(Rational(2)));
    // shifting up from a negative non-integer argument
    auto neg = GammaExpr::gamma(Rational(-1, 2));
    auto pos = GammaExpr::gamma(Rational(1, 2), Rational(-2));
    CHECK(neg == pos);
    CHECK_THROWS_AS(GammaExpr::gamma(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(GammaExpr::gamma(Rational(-3)), std::domain_error);
}

TEST_CASE("gamma sums cancel within classes") {
    GammaSum sum;
    sum.add(GammaExpr::gamma(Rational(5, 2)));
    sum.add(GammaExpr::gamma(Rational(1, 2), Rational(-3, 4)));
    CHECK(sum.is_exactly_zero());

    GammaSum mixed;
    mixed.add(GammaExpr::gamma(Rational(1, 2)));
    mixed.add(GammaExpr::gamma(Rational(1, 3)));
    CHECK_FALSE(mixed.is_exactly_zero());
    CHECK(mixed.terms().size() == 2);
}

TEST_CASE("sphere measure and quadratic moments") {
    ModelParams zero2(2, {Rational(0), Rational(0)});
    auto measure = monomial_sphere_integral({0, 0}, zero2);
    const long bits = BigFloat::bits_for_digits(50);
    auto two_pi = BigFloat::pi(bits) * BigFloat(Rational(2), bits);
    CHECK(close(measure.value(50), two_pi, parse_rational("1/100000000000000000000000000000000000000")));

    CHECK(monomial_sphere_integral({1, 0}, zero2).is_zero());
    CHECK(monomial_sphere_integral({3, 2}, zero2).is_zero());

    auto cos_sq = monomial_sphere_integral({2, 0}, zero2);
    CHECK(close(cos_sq.value(50), BigFloat::pi(bits),
                parse_rational("1/100000000000000000000000000000000000000")));
}

TEST_CASE("integral is symmetric under permuting exponent and weight pairs") {
    ModelParams p(3, {Rational(1, 2), Rational(1, 3), Rational(1, 4)});
    ModelParams swapped(3, {Rational(1, 3), Rational(1, 2), Rational(1, 4)});
    CHECK(monomial_sphere_integral({2, 4, 0}, p) == monomial_sphere_integral({4, 2, 0}, swapped));
    CHECK(monomial_sphere_integral({0, 2, 6}, p) ==
          monomial_sphere_integral({2, 0, 6}, ModelParams(3, {Rational(1, 3), Rational(1, 2), Rational(1, 4)})));
}

TEST_CASE("quadratic moments sum to the measure") {
    // sum_i int s_i^2 w = int w because sum s_i^2 = 1 on the sphere
    for (const auto& params : {params2, params3}) {
        GammaSum sum;
        const int n = params.dimension();
        for (int i = 0; i < n; ++i) {
            ExponentVector a(n, 0);
            a[i] = 2;
            sum.add(monomial_sphere_integral(a, params));
        }
        sum.add(monomial_sphere_integral(ExponentVector(n, 0), params).scale(Rational(-1)));
        CHECK(sum.is_exactly_zero());
    }
}

TEST_CASE("inner products of parity-mismatched polynomials vanish") {
    auto one = LaurentPoly::constant(2, 1);
    auto s1 = LaurentPoly::variable(2, 1);
    CHECK(inner_product(one, s1, params2).is_exactly_zero());
}

TEST_CASE("kernel elements of adjacent degrees are orthogonal") {
    auto b0 = kernel_basis(2, 0, params2);
    auto b1 = kernel_basis(2, 1, params2);
    CHECK(inner_product(b1.elements[0], b0.elements[0], params2).is_exactly_zero());

    auto c1 = kernel_basis(3, 1, params3);
    auto c2 = kernel_basis(3, 2, params3);
    for (const auto& p : c1.elements)
        for (const auto& q : c2.elements)
            CHECK(inner_product(p, q, params3).is_exactly_zero());
}

TEST_CASE("gram matrix of a kernel basis is diagonal") {
    auto basis = kernel_basis(3, 2, params3);
    auto gram = gram_matrix(basis.elements, params3);
    REQUIRE(gram.size() == 3);
    for (std::size_t i = 0; i < gram.size(); ++i) {
        for (std::size_t j = 0; j < gram.size(); ++j) {
            if (i == j)
                CHECK_FALSE(gram[i][j].is_exactly_zero());
            else
                CHECK(gram[i][j].is_exactly_zero());
        }
    }
}

TEST_CASE("jacobi polynomials are orthogonal for the matching weight") {
    const Rational al(1, 2), be(1, 3);
    std::vector<JacobiPoly> ps;
    for (int d = 0; d <= 3; ++d) ps.push_back(jacobi(d, al, be));
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            GammaSum ip;
            for (int i = 0; i <= a; ++i)
                for (int j = 0; j <= b; ++j)
                    ip.add(jacobi_weight_moment(i + j, al, be).scale(ps[a].coeffs[i] * ps[b].coeffs[j]));
            if (a == b)
                CHECK_FALSE(ip.is_exactly_zero());
            else
                CHECK(ip.is_exactly_zero());
        }
    }
}

TEST_CASE("high-precision evaluation agrees with exact knowledge") {
    // gamma(1/2)^2 = pi
    auto expr = GammaExpr::gamma(Rational(1, 2)) * GammaExpr::gamma(Rational(1, 2));
    const long bits = BigFloat::bits_for_digits(50);
    CHECK(close(expr.value(50), BigFloat::pi(bits),
                parse_rational("1/100000000000000000000000000000000000000")));
    // exact rational passthrough
    CHECK(close(GammaExpr::from_rational(Rational(22, 7)).value(50),
                BigFloat(Rational(22, 7), bits),
                parse_rational("1/1000000000000000000000000000000000000000000000000")));
}
