#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunklbi/model.hpp"
#include "test_support.hpp"

using namespace dunklbi;
using Op = OperatorExpr;

namespace {

LaurentPoly var(int dim, int axis, int power = 1) {
    return LaurentPoly::variable(dim, axis, power);
}

const ModelParams params2{2, {Rational(1, 2), Rational(1, 3)}};
const ModelParams params3{3, {Rational(1, 2), Rational(1, 3), Rational(1, 4)}};

// All ten structure relations of the superalgebra realization.
void check_osp_relations(const SubsetRealization& r, int dim, int max_degree) {
    auto two = [](const Op& e) { return Op::scale(Rational(2), e); };
    CHECK(equal_on_degree(anticommutator(r.coord, r.coord), two(r.r2), dim, max_degree).ok());
    CHECK(equal_on_degree(anticommutator(r.dirac, r.dirac),
                          two(Op::compose(r.dirac, r.dirac)), dim, max_degree).ok());
    CHECK(equal_on_degree(anticommutator(r.coord, r.dirac), two(r.euler), dim, max_degree).ok());
    CHECK(equal_on_degree(commutator(r.dirac, r.euler), r.dirac, dim, max_degree).ok());
    CHECK(equal_on_degree(commutator(r.dirac, r.r2), two(r.coord), dim, max_degree).ok());
    CHECK(equal_on_degree(commutator(r.euler, r.coord), r.coord, dim, max_degree).ok());
    auto d2 = Op::compose(r.dirac, r.dirac);
    CHECK(equal_on_degree(commutator(d2, r.coord), two(r.dirac), dim, max_degree).ok());
    CHECK(equal_on_degree(commutator(d2, r.euler), two(d2), dim, max_degree).ok());
    CHECK(equal_on_degree(commutator(d2, r.r2), Op::scale(Rational(4), r.euler), dim, max_degree).ok());
    CHECK(equal_on_degree(commutator(r.euler, r.r2), two(r.r2), dim, max_degree).ok());
}

}  // namespace

TEST_CASE("gauged Dunkl operator") {
    auto d1 = dunkl_d(1, params2);
    CHECK(d1.apply(LaurentPoly::constant(2, 1)).is_zero());
    CHECK(d1.apply(var(2, 1)) == LaurentPoly::constant(2, Rational(1) + Rational(2) * Rational(1, 2)));
    CHECK(d1.apply(var(2, 1, 2)) == var(2, 1) * Rational(2));
}

TEST_CASE("subset realization operators") {
    auto single = subset_realization(SubsetLabel{1}, params2);
    CHECK(equal_on_degree(single.dirac, dunkl_d(1, params2), 2, 6).ok());
    CHECK(equal_on_degree(single.coord, Op::mul_var(1), 2, 6).ok());

    auto second = subset_realization(SubsetLabel{2}, params2);
    CHECK(second.coord.apply(LaurentPoly::constant(2, 1)) == var(2, 2));

    auto both = subset_realization(SubsetLabel{1, 2}, params2);
    CHECK(both.coord.apply(var(2, 1)) == var(2, 1, 2) - var(2, 1) * var(2, 2));

    CHECK_THROWS_AS(subset_realization(SubsetLabel{}, params2), std::invalid_argument);
    CHECK_THROWS_AS(subset_realization(SubsetLabel{5}, params2), std::invalid_argument);
}

TEST_CASE("reflection prefix conventions differ") {
    ModelParams p3(3, {Rational(1, 2), Rational(1, 3), Rational(1, 4)});
    auto full = subset_realization(SubsetLabel{1, 3}, p3, ReflectionPrefix::full);
    auto restricted = subset_realization(SubsetLabel{1, 3}, p3, ReflectionPrefix::restricted);
    auto s2 = var(3, 2);
    CHECK(full.coord.apply(s2) == var(3, 1) * s2 - s2 * var(3, 3));
    CHECK(restricted.coord.apply(s2) == var(3, 1) * s2 + s2 * var(3, 3));
}

TEST_CASE("structure relations hold for every nonempty subset at n=3") {
    for (const auto& a : SubsetLabel::all_subsets(3, false)) {
        auto r = subset_realization(a, params3);
        check_osp_relations(r, 3, 4);
    }
}

TEST_CASE("structure relations hold at mu = 0") {
    ModelParams p(3, {Rational(0), Rational(0), Rational(0)});
    auto r = subset_realization(SubsetLabel{1, 2, 3}, p);
    check_osp_relations(r, 3, 4);
}

TEST_CASE("sCasimir conventions and closed forms") {
    CHECK(equal_on_degree(scasimir(SubsetLabel{}, params2),
                          Op::scalar(Rational(-1, 2)), 2, 4).ok());
    // singleton: S_i = mu_i R_i
    CHECK(equal_on_degree(scasimir(SubsetLabel{1}, params2),
                          Op::scale(Rational(1, 2), Op::reflect(1)), 2, 8).ok());
    CHECK(equal_on_degree(scasimir(SubsetLabel{2}, params2),
                          Op::scale(Rational(1, 3), Op::reflect(2)), 2, 8).ok());
}

TEST_CASE("sCasimir anticommutes with odd and commutes with even generators") {
    for (const auto& a : SubsetLabel::all_subsets(3, false)) {
        auto r = subset_realization(a, params3);
        auto s = scasimir(a, params3);
        auto zero = Op::scalar(Rational(0));
        CHECK(equal_on_degree(anticommutator(s, r.dirac), zero, 3, 4).ok());
        CHECK(equal_on_degree(anticommutator(s, r.coord), zero, 3, 4).ok());
        CHECK(equal_on_degree(commutator(s, r.euler), zero, 3, 4).ok());
        CHECK(equal_on_degree(commutator(s, r.r2), zero, 3, 4).ok());
        CHECK(equal_on_degree(commutator(s, Op::compose(r.dirac, r.dirac)), zero, 3, 4).ok());
    }
}

TEST_CASE("Casimir conventions and centrality") {
    CHECK(equal_on_degree(casimir(SubsetLabel{1}, params2),
                          Op::scalar(Rational(1, 2)), 2, 6).ok());
    CHECK(equal_on_degree(casimir(SubsetLabel{}, params2),
                          Op::scalar(Rational(-1, 2)), 2, 6).ok());
    // singleton general formula agrees with the scalar convention
    auto single = subset_realization(SubsetLabel{1}, params2);
    auto q_formula = Op::compose(scasimir(SubsetLabel{1}, params2), single.refl);
    CHECK(equal_on_degree(q_formula, Op::scalar(Rational(1, 2)), 2, 8).ok());

    for (const auto& a : SubsetLabel::all_subsets(3, false)) {
        auto r = subset_realization(a, params3);
        auto q = casimir(a, params3);
        auto zero = Op::scalar(Rational(0));
        CHECK(equal_on_degree(commutator(q, r.dirac), zero, 3, 4).ok());
        CHECK(equal_on_degree(commutator(q, r.coord), zero, 3, 4).ok());
        CHECK(equal_on_degree(commutator(q, r.euler), zero, 3, 4).ok());
    }
}

TEST_CASE("single-axis realizations mutually commute") {
    auto zero = Op::scalar(Rational(0));
    std::vector<Op> ops1 = {dunkl_d(1, params3), Op::mul_var(1), dunkl_e(1, params3)};
    std::vector<Op> ops2 = {dunkl_d(2, params3), Op::mul_var(2), dunkl_e(2, params3)};
    for (const auto& z : ops1)
        for (const auto& w : ops2)
            CHECK(equal_on_degree(commutator(z, w), zero, 3, 4).ok());
}

TEST_CASE("conserved quantities coincide with the Casimirs") {
    CHECK(equal_on_degree(symmetry_m(SubsetLabel{1, 2}, params2),
                          casimir(SubsetLabel{1, 2}, params2), 2, 8).ok());
    CHECK(equal_on_degree(symmetry_m(SubsetLabel{2}, params3),
                          Op::scalar(Rational(1, 3)), 3, 4).ok());
    // images of polynomials stay polynomial even though the expression holds
    // inverse-variable atoms
    auto m13 = symmetry_m(SubsetLabel{1, 3}, params3);
    CHECK(m13.apply(var(3, 2)).is_polynomial());
    CHECK(equal_on_degree(m13, casimir(SubsetLabel{1, 3}, params3), 3, 6, true).ok());
}

TEST_CASE("Hamiltonian scalar term and ground-state action") {
    // n = 2: constant term -(n-1)(n-3)/4 = 1/4; acting on 1 gives (sum mu)^2
    ModelParams p(2, {Rational(1, 4), Rational(1, 4)});
    auto h = hamiltonian(p);
    CHECK(h.apply(LaurentPoly::constant(2, 1)) ==
          LaurentPoly::constant(2, Rational(1, 4)));
    CHECK(hamiltonian_eigenvalue(0, p) == Rational(1, 4));

    auto rhs = hamiltonian_rhs(p);
    CHECK(rhs.apply(LaurentPoly::constant(2, 1)) == LaurentPoly::constant(2, Rational(1, 4)));
    // the potential part on its own leaves the polynomial ring
    auto pot = hamiltonian_rhs_potential_part(p);
    CHECK_FALSE(pot.apply(LaurentPoly::constant(2, 1)).is_polynomial());
}

TEST_CASE("Hamiltonian identity between algebraic and explicit forms") {
    CHECK(equal_on_degree(hamiltonian(params2), hamiltonian_rhs(params2), 2, 6, true).ok());
    ModelParams p(3, {Rational(1), Rational(1, 2), Rational(1, 3)});
    CHECK(equal_on_degree(hamiltonian(p), hamiltonian_rhs(p), 3, 4, true).ok());
}

TEST_CASE("explicit form reduces to the angular Laplacian at mu = 0") {
    ModelParams p(3, {Rational(0), Rational(0), Rational(0)});
    auto rhs = hamiltonian_rhs(p);
    auto s1s2 = var(3, 1) * var(3, 2);
    CHECK(rhs.apply(s1s2) == s1s2 * Rational(6));
}

TEST_CASE("Hamiltonian commutes with reflections and Casimirs") {
    auto h = hamiltonian(params2);
    auto zero = Op::scalar(Rational(0));
    for (int i = 1; i <= 2; ++i)
        CHECK(equal_on_degree(commutator(h, Op::reflect(i)), zero, 2, 6).ok());
    for (const auto& a : SubsetLabel::all_subsets(2, false))
        CHECK(equal_on_degree(commutator(h, casimir(a, params2)), zero, 2, 6).ok());
}

TEST_CASE("anticommutation structure constants") {
    SubsetLabel a{1, 2}, b{2, 3};
    auto lhs = anticommutator(casimir(a, params3), casimir(b, params3));
    CHECK(equal_on_degree(lhs, bi_rhs(a, b, params3), 3, 4).ok());

    // rank-1 form: {K_1, K_2} = K_3 + 2 Q_2 Q_123 + 2 Q_1 Q_3
    auto q = [&](SubsetLabel s) { return casimir(s, params3); };
    auto explicit_rhs = Op::sum(
        {q(SubsetLabel{1, 3}),
         Op::scale(Rational(2), Op::compose(q(SubsetLabel{2}), q(SubsetLabel{1, 2, 3}))),
         Op::scale(Rational(2), Op::compose(q(SubsetLabel{1}), q(SubsetLabel{3})))});
    CHECK(equal_on_degree(bi_rhs(a, b, params3), explicit_rhs, 3, 4).ok());

    // A = B: relation reduces to 2 Q_A^2
    auto qa = casimir(a, params3);
    CHECK(equal_on_degree(bi_rhs(a, a, params3),
                          Op::scale(Rational(2), Op::compose(qa, qa)), 3, 4).ok());

    // disjoint pair: relation reduces to 2 Q_A Q_B
    SubsetLabel c{3};
    CHECK(equal_on_degree(bi_rhs(a, c, params3),
                          Op::scale(Rational(2), Op::compose(qa, q(c))), 3, 4).ok());
    CHECK(equal_on_degree(anticommutator(qa, q(c)), bi_rhs(a, c, params3), 3, 4).ok());
}

TEST_CASE("eigenvalue formulas at pinned parameter points") {
    ModelParams half3(3, {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    CHECK(scasimir_eigenvalue(0, half3) == Rational(5, 2));
    CHECK(hamiltonian_eigenvalue(0, half3) == Rational(15, 4));
    CHECK(hamiltonian_eigenvalue_printed(0, half3) == Rational(3));

    ModelParams zero2(2, {Rational(0), Rational(0)});
    CHECK(scasimir_eigenvalue(1, zero2) == Rational(3, 2));
    CHECK(hamiltonian_eigenvalue(1, zero2) == Rational(1));  // circle harmonics: m^2

    ModelParams p4(4, {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1, 5)});
    CHECK(scasimir_eigenvalue(3, p4) == Rational(347, 60));
    CHECK(hamiltonian_eigenvalue(3, p4) == Rational(96889, 3600));
    CHECK(hamiltonian_eigenvalue(1, p4) == Rational(35209, 3600));
    // the two formulas agree exactly when n = 4
    for (int m = 0; m <= 5; ++m)
        CHECK(hamiltonian_eigenvalue(m, p4) == hamiltonian_eigenvalue_printed(m, p4));
}
