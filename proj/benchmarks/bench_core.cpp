#include <benchmark/benchmark.h>

#include "dunklbi/ck.hpp"
#include "dunklbi/integrals.hpp"
#include "dunklbi/model.hpp"
#include "dunklbi/wavefn.hpp"

using namespace dunklbi;

namespace {

ModelParams params_for(int n) {
    std::vector<Rational> mu = {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5)};
    mu.resize(n);
    return ModelParams(n, std::move(mu));
}

LaurentPoly dense_poly(int n, int degree) {
    LaurentPoly p = LaurentPoly::zero(n);
    int k = 1;
    for (const auto& e : monomials_up_to_degree(n, degree)) {
        p += LaurentPoly::monomial(e, Rational(k, k + 1));
        ++k;
    }
    return p;
}

void BM_LaurentMul(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    auto p = dense_poly(3, degree);
    auto q = dense_poly(3, degree);
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_LaurentMul)->Arg(4)->Arg(8);

void BM_ApplyScasimir(benchmark::State& state) {
    const auto params = params_for(3);
    const auto s = scasimir(SubsetLabel::full(3), params);
    const auto p = dense_poly(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(s.apply(p));
}
BENCHMARK(BM_ApplyScasimir)->Arg(4)->Arg(8);

void BM_EqualOnDegreePair(benchmark::State& state) {
    const auto params = params_for(3);
    const SubsetLabel a{1, 2}, b{2, 3};
    const auto lhs = anticommutator(casimir(a, params), casimir(b, params));
    const auto rhs = bi_rhs(a, b, params);
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(equal_on_degree(lhs, rhs, 3, degree));
}
BENCHMARK(BM_EqualOnDegreePair)->Arg(4)->Arg(6);

void BM_KernelBasis(benchmark::State& state) {
    const auto params = params_for(3);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(3, m, params));
}
BENCHMARK(BM_KernelBasis)->Arg(3)->Arg(5);

void BM_FischerDecompose(benchmark::State& state) {
    const auto params = params_for(3);
    const auto p = dense_poly(3, 4).homogeneous_component(4);
    for (auto _ : state) benchmark::DoNotOptimize(fischer_decompose(p, params));
}
BENCHMARK(BM_FischerDecompose);

void BM_GramMatrix(benchmark::State& state) {
    const auto params = params_for(3);
    const auto basis = kernel_basis(3, static_cast<int>(state.range(0)), params);
    for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(basis.elements, params));
}
BENCHMARK(BM_GramMatrix)->Arg(3)->Arg(4);

void BM_UnitNormDefect(benchmark::State& state) {
    const auto params = params_for(3);
    const WavefunctionLabel label({1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(unit_norm_defect(label, params, 50));
}
BENCHMARK(BM_UnitNormDefect);

}  // namespace

BENCHMARK_MAIN();
