#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "dunklbi/laurent.hpp"
#include "test_support.hpp"

using namespace dunklbi;

namespace {

LaurentPoly var(int dim, int axis, int power = 1) {
    return LaurentPoly::variable(dim, axis, power);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    // canonical form is reduced with positive denominator
    Rational q = make_rational(4, -6);
    CHECK(q.get_num() == -2);
    CHECK(q.get_den() == 3);
}

TEST_CASE("pochhammer and factorial") {
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(1, 2) * Rational(3, 2) * Rational(5, 2));
    CHECK(pochhammer(Rational(7), 0) == 1);
    CHECK(factorial_rational(5) == 120);
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("addition") {
    auto s1 = var(2, 1);
    CHECK((s1 + (-s1)).is_zero());
    auto p = var(2, 1, 2) + var(2, 2, 2);
    CHECK(p.term_count() == 2);
    auto q = s1 * Rational(1, 2) + s1 * Rational(1, 3);
    CHECK(q == s1 * Rational(5, 6));
    CHECK_THROWS_AS(var(2, 1) + var(3, 1), std::invalid_argument);
}

TEST_CASE("multiplication") {
    auto s1 = var(2, 1);
    CHECK(s1 * var(2, 1, -1) == LaurentPoly::constant(2, 1));
    auto sum = var(2, 1) + var(2, 2);
    auto sq = sum * sum;
    CHECK(sq.coefficient({2, 0}) == 1);
    CHECK(sq.coefficient({1, 1}) == 2);
    CHECK(sq.coefficient({0, 2}) == 1);
    CHECK((LaurentPoly::zero(2) * sum).is_zero());
}

TEST_CASE("partial derivative") {
    CHECK(var(1, 1, 3).partial(1) == var(1, 1, 2) * Rational(3));
    CHECK(var(2, 2).partial(1).is_zero());
    CHECK(var(1, 1, -1).partial(1) == var(1, 1, -2) * Rational(-1));
    CHECK_THROWS_AS(var(2, 1).partial(3), std::invalid_argument);
}

TEST_CASE("reflection") {
    auto s1s2 = var(2, 1) * var(2, 2);
    CHECK(s1s2.reflect(1) == -s1s2);
    CHECK(var(2, 1, 2).reflect(1) == var(2, 1, 2));
    testing::Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        auto p = rng.laurent(3, 5);
        CHECK(p.reflect(2).reflect(2) == p);
    }
}

TEST_CASE("reflection anticommutes with the matching partial") {
    testing::Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        auto p = rng.laurent(2, 5);
        CHECK(p.reflect(1).partial(1) == -(p.partial(1).reflect(1)));
    }
}

TEST_CASE("homogeneous components") {
    auto p = LaurentPoly::constant(2, 1) + var(2, 1) + var(2, 1) * var(2, 2);
    CHECK(p.homogeneous_component(2) == var(2, 1) * var(2, 2));
    CHECK(var(2, 1, 2).homogeneous_component(1).is_zero());

    testing::Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        auto q = rng.laurent(3, 6);
        LaurentPoly sum = LaurentPoly::zero(3);
        for (int m = -9; m <= 12; ++m) sum += q.homogeneous_component(m);
        CHECK(sum == q);
    }
}

TEST_CASE("polynomial predicate") {
    CHECK_FALSE((var(2, 1, -1) * var(2, 2, 2)).is_polynomial());
    CHECK(LaurentPoly::zero(2).is_polynomial());
    CHECK((var(2, 1) + LaurentPoly::constant(2, 3)).is_polynomial());
}

TEST_CASE("ring axioms on random triples") {
    testing::Rng rng(17);
    for (int t = 0; t < 15; ++t) {
        auto a = rng.laurent(2, 4);
        auto b = rng.laurent(2, 4);
        auto c = rng.laurent(2, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("degree is additive for homogeneous factors") {
    testing::Rng rng(19);
    for (int t = 0; t < 15; ++t) {
        int da = rng.uniform_int(0, 4), db = rng.uniform_int(0, 4);
        auto a = rng.homogeneous(3, da);
        auto b = rng.homogeneous(3, db);
        auto ab = a * b;
        REQUIRE_FALSE(ab.is_zero());
        CHECK(ab.degree().value() == da + db);
        CHECK(ab.is_homogeneous());
    }
}

TEST_CASE("canonical text form") {
    auto p = var(2, 1, 2) * Rational(3, 2) + var(2, 2, -1) * Rational(-1, 3);
    CHECK(p.to_string() == "-1/3*s2^-1 + 3/2*s1^2");
    CHECK(LaurentPoly::zero(2).to_string() == "0");
    CHECK(LaurentPoly::constant(3, Rational(7)).to_string() == "7");
}

TEST_CASE("restriction and independence") {
    auto p = var(2, 1) + var(2, 2) * var(2, 1, 2);
    CHECK(p.restrict_var_to_zero(2) == var(2, 1));
    CHECK(p.independent_of(2) == false);
    CHECK(var(2, 1, 3).independent_of(2));
    CHECK_THROWS_AS(var(2, 1, -1).restrict_var_to_zero(1), std::domain_error);
}
