#include "dunklbi/model.hpp"

#include <stdexcept>

namespace dunklbi {

namespace {

// prod_{j<i} R_j with j restricted to A when the restricted convention is on.
OperatorExpr reflection_prefix_below(int i, const SubsetLabel& a, ReflectionPrefix prefix) {
    OperatorExpr out = OperatorExpr::identity();
    for (int j = 1; j < i; ++j) {
        if (prefix == ReflectionPrefix::restricted && !a.contains(j)) continue;
        out = OperatorExpr::compose(out, OperatorExpr::reflect(j));
    }
    return out;
}

void check_axes_in_range(const SubsetLabel& a, const ModelParams& params) {
    if (a.max_axis() > params.dimension())
        throw std::invalid_argument("subset contains an axis beyond the model dimension");
}

}  // namespace

OperatorExpr dunkl_d(int axis, const ModelParams& params) {
    // d_i + mu_i * (1/s_i)(1 - R_i)
    auto one_minus_r = OperatorExpr::sum(
        {OperatorExpr::identity(), OperatorExpr::scale(Rational(-1), OperatorExpr::reflect(axis))});
    return OperatorExpr::sum(
        {OperatorExpr::partial(axis),
         OperatorExpr::scale(params.mu(axis),
                             OperatorExpr::compose(OperatorExpr::inv_var(axis), one_minus_r))});
}

OperatorExpr dunkl_e(int axis, const ModelParams& params) {
    return OperatorExpr::sum(
        {OperatorExpr::compose(OperatorExpr::mul_var(axis), OperatorExpr::partial(axis)),
         OperatorExpr::scalar(params.gamma(axis))});
}

SubsetRealization subset_realization(const SubsetLabel& a, const ModelParams& params,
                                     ReflectionPrefix prefix) {
    if (a.empty()) throw std::invalid_argument("subset_realization: empty subset");
    check_axes_in_range(a, params);

    std::vector<OperatorExpr> dirac_terms, coord_terms, euler_terms, r2_terms;
    OperatorExpr refl = OperatorExpr::identity();
    for (int i : a.axes()) {
        auto pre = reflection_prefix_below(i, a, prefix);
        dirac_terms.push_back(OperatorExpr::compose(dunkl_d(i, params), pre));
        coord_terms.push_back(OperatorExpr::compose(OperatorExpr::mul_var(i), pre));
        euler_terms.push_back(dunkl_e(i, params));
        r2_terms.push_back(
            OperatorExpr::compose(OperatorExpr::mul_var(i), OperatorExpr::mul_var(i)));
        refl = OperatorExpr::compose(refl, OperatorExpr::reflect(i));
    }
    return SubsetRealization{OperatorExpr::sum(std::move(dirac_terms)),
                             OperatorExpr::sum(std::move(coord_terms)),
                             OperatorExpr::sum(std::move(euler_terms)), refl,
                             OperatorExpr::sum(std::move(r2_terms))};
}

OperatorExpr scasimir(const SubsetLabel& a, const ModelParams& params, ReflectionPrefix prefix) {
    if (a.empty()) return OperatorExpr::scalar(Rational(-1, 2));
    auto real = subset_realization(a, params, prefix);
    return OperatorExpr::scale(
        Rational(1, 2), OperatorExpr::sum({commutator(real.dirac, real.coord),
                                           OperatorExpr::scalar(Rational(-1))}));
}

OperatorExpr casimir(const SubsetLabel& a, const ModelParams& params, ReflectionPrefix prefix) {
    if (a.empty()) return OperatorExpr::scalar(Rational(-1, 2));
    check_axes_in_range(a, params);
    if (a.size() == 1) return OperatorExpr::scalar(params.mu(a.axes().front()));
    auto real = subset_realization(a, params, prefix);
    return OperatorExpr::compose(scasimir(a, params, prefix), real.refl);
}

namespace {

// Ungauged M_A exactly as its closed form reads: the J-terms carry the inner
// reflection product over axes j..k-1, and the whole sum is followed by the
// product of reflections over A.
OperatorExpr symmetry_m_ungauged(const SubsetLabel& a, const ModelParams& params) {
    std::vector<OperatorExpr> terms;
    terms.push_back(OperatorExpr::scalar(Rational(-1, 2)));
    for (int i : a.axes()) {
        terms.push_back(OperatorExpr::scalar(Rational(1, 2)));
        terms.push_back(OperatorExpr::scale(params.mu(i), OperatorExpr::reflect(i)));
    }
    for (int j : a.axes()) {
        for (int k : a.axes()) {
            if (j >= k) continue;
            // -i J_{jk} = s_k d_j - s_j d_k
            auto minus_i_j = OperatorExpr::sum(
                {OperatorExpr::compose(OperatorExpr::mul_var(k), OperatorExpr::partial(j)),
                 OperatorExpr::scale(Rational(-1), OperatorExpr::compose(OperatorExpr::mul_var(j),
                                                                         OperatorExpr::partial(k)))});
            // - s_k (mu_j / s_j) R_j
            auto refl_j = OperatorExpr::scale(
                -params.mu(j),
                OperatorExpr::compose(
                    OperatorExpr::mul_var(k),
                    OperatorExpr::compose(OperatorExpr::inv_var(j), OperatorExpr::reflect(j))));
            // + s_j (mu_k / s_k) R_k
            auto refl_k = OperatorExpr::scale(
                params.mu(k),
                OperatorExpr::compose(
                    OperatorExpr::mul_var(j),
                    OperatorExpr::compose(OperatorExpr::inv_var(k), OperatorExpr::reflect(k))));
            OperatorExpr inner = OperatorExpr::identity();
            for (int l = j; l <= k - 1; ++l)
                inner = OperatorExpr::compose(inner, OperatorExpr::reflect(l));
            terms.push_back(
                OperatorExpr::compose(OperatorExpr::sum({minus_i_j, refl_j, refl_k}), inner));
        }
    }
    OperatorExpr tail = OperatorExpr::identity();
    for (int m : a.axes()) tail = OperatorExpr::compose(tail, OperatorExpr::reflect(m));
    return OperatorExpr::compose(OperatorExpr::sum(std::move(terms)), tail);
}

}  // namespace

OperatorExpr symmetry_m(const SubsetLabel& a, const ModelParams& params) {
    check_axes_in_range(a, params);
    if (a.empty()) return OperatorExpr::scalar(Rational(-1, 2));
    if (a.size() == 1) return OperatorExpr::scalar(params.mu(a.axes().front()));
    return gauge_conjugate(symmetry_m_ungauged(a, params), params);
}

OperatorExpr hamiltonian(const ModelParams& params, ReflectionPrefix prefix) {
    const int n = params.dimension();
    auto s = scasimir(SubsetLabel::full(n), params, prefix);
    return OperatorExpr::sum({OperatorExpr::compose(s, s),
                              OperatorExpr::scale(Rational(-1), s),
                              OperatorExpr::scalar(Rational(-(n - 1) * (n - 3), 4))});
}

namespace {

OperatorExpr hamiltonian_rhs_potential_part_ungauged(const ModelParams& params) {
    const int n = params.dimension();
    std::vector<OperatorExpr> r2_terms, pot_terms;
    for (int i = 1; i <= n; ++i) {
        r2_terms.push_back(
            OperatorExpr::compose(OperatorExpr::mul_var(i), OperatorExpr::mul_var(i)));
        // (mu_i / s_i^2)(mu_i - R_i)
        auto inv_sq = OperatorExpr::compose(OperatorExpr::inv_var(i), OperatorExpr::inv_var(i));
        auto mu_minus_r = OperatorExpr::sum(
            {OperatorExpr::scalar(params.mu(i)),
             OperatorExpr::scale(Rational(-1), OperatorExpr::reflect(i))});
        pot_terms.push_back(OperatorExpr::scale(
            params.mu(i), OperatorExpr::compose(inv_sq, mu_minus_r)));
    }
    return OperatorExpr::compose(OperatorExpr::sum(std::move(r2_terms)),
                                 OperatorExpr::sum(std::move(pot_terms)));
}

}  // namespace

OperatorExpr hamiltonian_rhs_potential_part(const ModelParams& params) {
    return gauge_conjugate(hamiltonian_rhs_potential_part_ungauged(params), params);
}

OperatorExpr hamiltonian_rhs(const ModelParams& params) {
    const int n = params.dimension();
    std::vector<OperatorExpr> terms;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            // J_ij^2 = -(s_i d_j - s_j d_i)^2
            auto k = OperatorExpr::sum(
                {OperatorExpr::compose(OperatorExpr::mul_var(i), OperatorExpr::partial(j)),
                 OperatorExpr::scale(Rational(-1), OperatorExpr::compose(OperatorExpr::mul_var(j),
                                                                         OperatorExpr::partial(i)))});
            terms.push_back(OperatorExpr::scale(Rational(-1), OperatorExpr::compose(k, k)));
        }
    }
    terms.push_back(hamiltonian_rhs_potential_part_ungauged(params));
    return gauge_conjugate(OperatorExpr::sum(std::move(terms)), params);
}

OperatorExpr bi_rhs(const SubsetLabel& a, const SubsetLabel& b, const ModelParams& params,
                    ReflectionPrefix prefix) {
    check_axes_in_range(a, params);
    check_axes_in_range(b, params);
    auto q = [&](const SubsetLabel& s) { return casimir(s, params, prefix); };
    return OperatorExpr::sum(
        {q(a.symmetric_difference(b)),
         OperatorExpr::scale(Rational(2), OperatorExpr::compose(q(a.set_intersection(b)),
                                                                q(a.set_union(b)))),
         OperatorExpr::scale(Rational(2), OperatorExpr::compose(q(a.set_difference(b)),
                                                                q(b.set_difference(a))))});
}

Rational scasimir_eigenvalue(int m, const ModelParams& params) {
    return m + params.gamma_sum(SubsetLabel::full(params.dimension())) - Rational(1, 2);
}

Rational hamiltonian_eigenvalue(int m, const ModelParams& params) {
    const int n = params.dimension();
    const Rational lam = m + params.mu_sum();
    return lam * (lam + n - 2);
}

Rational hamiltonian_eigenvalue_printed(int m, const ModelParams& params) {
    const Rational lam = m + params.gamma_sum(SubsetLabel::full(params.dimension()));
    return lam * (lam - 2);
}

}  // namespace dunklbi
