#include "dunklbi/wavefn.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dunklbi/integrals.hpp"
#include "dunklbi/jacobi.hpp"

namespace dunklbi {

WavefunctionLabel::WavefunctionLabel(std::vector<int> parts) : j(std::move(parts)) {
    if (j.empty()) throw std::invalid_argument("WavefunctionLabel: at least one index required");
    for (int v : j)
        if (v < 0) throw std::invalid_argument("WavefunctionLabel: negative index");
    m = std::accumulate(j.begin(), j.end(), 0);
}

std::vector<WavefunctionLabel> WavefunctionLabel::all(int n, int m) {
    std::vector<WavefunctionLabel> out;
    for (auto& parts : compositions_colex(m, n - 1)) out.emplace_back(std::move(parts));
    return out;
}

std::string WavefunctionLabel::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",";
        os << j[i];
    }
    os << ")";
    return os.str();
}

namespace {

SubsetLabel prefix_subset(int k) {
    std::vector<int> axes(k);
    for (int i = 0; i < k; ++i) axes[i] = i + 1;
    return SubsetLabel(std::move(axes));
}

// sum_{i<k} s_i^2 as a polynomial in n variables.
LaurentPoly radius_sq_below(int n, int k) {
    LaurentPoly out = LaurentPoly::zero(n);
    for (int i = 1; i < k; ++i) out += LaurentPoly::variable(n, i, 2);
    return out;
}

// Seed function of the two lowest variables.
LaurentPoly seed_function(int j1, const ModelParams& params) {
    const int n = params.dimension();
    const Rational g1 = params.gamma(1), g2 = params.gamma(2);
    const LaurentPoly x = LaurentPoly::variable(n, 1, 2);
    const LaurentPoly y = LaurentPoly::variable(n, 2, 2);
    const int a = j1 / 2;
    const Rational pref = factorial_rational(a) / pochhammer(g2, a);

    LaurentPoly out = LaurentPoly::zero(n);
    if (j1 % 2 == 0) {
        out += substitute_bivariate(homogenized_jacobi(a, g2 - 1, g1 - 1), x, y);
        if (a >= 1) {
            auto s1s2 = LaurentPoly::variable(n, 1) * LaurentPoly::variable(n, 2);
            out += s1s2 * substitute_bivariate(homogenized_jacobi(a - 1, g2, g1), x, y);
        }
    } else {
        out += LaurentPoly::variable(n, 1) *
               substitute_bivariate(homogenized_jacobi(a, g2 - 1, g1), x, y);
        out = out - LaurentPoly::variable(n, 2) *
                        substitute_bivariate(homogenized_jacobi(a, g2, g1 - 1), x, y) *
                        ((a + g1) / (a + g2));
    }
    return out * pref;
}

// One level of the tower: the operator attached to variable s_k applied to
// the function built from the k-1 lower variables.
LaurentPoly apply_tower_level(const LaurentPoly& f, int k, const WavefunctionLabel& label,
                              const ModelParams& params, Convention conv) {
    const int n = params.dimension();
    const Rational gk = params.gamma(k);
    const int jk1 = label.j[k - 2];  // j_{k-1}
    int jsum = 0;
    for (int i = 0; i + 2 < k; ++i) jsum += label.j[i];  // j_{[k-2]}
    const Rational gsum = params.gamma_prefix(k - 1);    // gamma_{[k-1]}

    const LaurentPoly x = radius_sq_below(n, k);
    const LaurentPoly y = LaurentPoly::variable(n, k, 2);
    const LaurentPoly sk = LaurentPoly::variable(n, k);
    const auto below = subset_realization(prefix_subset(k - 1), params);

    const int c = jk1 / 2;
    const Rational pref = factorial_rational(c) / pochhammer(gk, c);

    LaurentPoly out = LaurentPoly::zero(n);
    if (jk1 % 2 == 0) {
        out += substitute_bivariate(homogenized_jacobi(c, gk - 1, jsum + gsum - 1), x, y) * f;
        if (c >= 1) {
            auto tail = below.coord.apply(below.refl.apply(f));
            out += sk * substitute_bivariate(homogenized_jacobi(c - 1, gk, jsum + gsum), x, y) * tail;
        }
    } else {
        // The odd branch's first Jacobi parameter generalizes the printed
        // four-variable instance; as_printed keeps gamma_4 verbatim.
        Rational first_param;
        if (conv == Convention::corrected) {
            first_param = gk;
        } else {
            if (n < 4)
                throw std::domain_error(
                    "as-printed tower operator references gamma_4, undefined below four variables");
            first_param = params.gamma(4);
        }
        out += substitute_bivariate(homogenized_jacobi(c, gk - 1, jsum + gsum), x, y) *
               below.coord.apply(f);
        out = out - sk * substitute_bivariate(homogenized_jacobi(c, first_param, jsum + gsum - 1),
                                              x, y) *
                        below.refl.apply(f) * ((jsum + c + gsum) / (c + gk));
    }
    return out * pref;
}

}  // namespace

LaurentPoly closed_form_psi(const WavefunctionLabel& label, const ModelParams& params,
                            Convention conv) {
    const int n = params.dimension();
    if (static_cast<int>(label.j.size()) != n - 1)
        throw std::invalid_argument("closed_form_psi: label length must be n-1");
    LaurentPoly f = seed_function(label.j[0], params);
    for (int k = 3; k <= n; ++k) f = apply_tower_level(f, k, label, params, conv);
    return f;
}

std::string CrossValidation::describe() const {
    switch (outcome) {
        case Outcome::exact:
            return "exact";
        case Outcome::proportional:
            return "proportional, ratio " + dunklbi::to_string(ratio);
        case Outcome::mismatch:
            return "mismatch";
    }
    return "mismatch";
}

CrossValidation cross_validate(const WavefunctionLabel& label, const ModelParams& params) {
    const int n = params.dimension();
    const auto basis = kernel_basis(n, label.m, params);
    const LaurentPoly cf = closed_form_psi(label, params);

    const LaurentPoly* ck = nullptr;
    for (std::size_t i = 0; i < basis.labels.size(); ++i)
        if (basis.labels[i] == label.j) ck = &basis.elements[i];
    if (ck == nullptr) throw std::logic_error("cross_validate: label missing from basis");

    CrossValidation out;
    if (cf == *ck) {
        out.outcome = CrossValidation::Outcome::exact;
        out.ratio = 1;
        return out;
    }
    if (cf.is_zero() || ck->is_zero()) return out;
    const auto& [e, c] = *ck->terms().begin();
    const Rational candidate = cf.coefficient(e) / c;
    if (candidate != 0 && cf == *ck * candidate) {
        out.outcome = CrossValidation::Outcome::proportional;
        out.ratio = candidate;
    }
    return out;
}

namespace {

// Exact eigenvalue extraction: image == ratio * base, or an exception
// describing the residual.
Rational exact_ratio(const LaurentPoly& image, const LaurentPoly& base, const char* what) {
    if (base.is_zero()) throw std::runtime_error(std::string(what) + ": zero wavefunction");
    const auto& [e, c] = *base.terms().begin();
    const Rational ratio = image.coefficient(e) / c;
    const LaurentPoly residual = image - base * ratio;
    if (!residual.is_zero())
        throw std::runtime_error(std::string(what) +
                                 ": not an exact eigenfunction; residual = " + residual.to_string());
    return ratio;
}

}  // namespace

EigenPair eigen_check(const WavefunctionLabel& label, const ModelParams& params) {
    const LaurentPoly psi = closed_form_psi(label, params);
    const auto s = scasimir(SubsetLabel::full(params.dimension()), params);
    const auto h = hamiltonian(params);
    EigenPair out;
    out.scasimir_eigenvalue = exact_ratio(s.apply(psi), psi, "sCasimir");
    out.hamiltonian_eigenvalue = exact_ratio(h.apply(psi), psi, "Hamiltonian");
    return out;
}

namespace {

// Squared seed normalization factor as an exact Gamma-ratio expression.
GammaExpr nu1_squared(const WavefunctionLabel& label, const ModelParams& params) {
    const Rational g1 = params.gamma(1), g2 = params.gamma(2);
    const int a = label.j[0] / 2;
    GammaExpr out = GammaExpr::gamma(a + g1 + g2);
    out = out.divide(GammaExpr::gamma(a + g1));
    out = out.divide(GammaExpr::gamma(a + g2));
    out = out.scale(pochhammer(g2, a) * pochhammer(g2, a) / factorial_rational(a));
    if (label.j[0] % 2 == 1) out = out.scale((a + g2) / (a + g1));
    return out;
}

// Squared tower normalization factor for level k (corrected indexing), or the
// printed top-level-indexed variant.
GammaExpr eta_squared(int k, const WavefunctionLabel& label, const ModelParams& params,
                      Convention conv) {
    const int n = params.dimension();
    const int level = conv == Convention::corrected ? k : n;
    const int jk1 = label.j[level - 2];
    const int c = jk1 / 2;
    int jsum = 0;
    for (int i = 0; i + 2 < level; ++i) jsum += label.j[i];
    const Rational gk = params.gamma(level);
    const Rational g_below = params.gamma_prefix(level - 1);
    const Rational g_upto = params.gamma_prefix(level);

    GammaExpr out = GammaExpr::gamma(c + jsum + g_upto);
    out = out.divide(GammaExpr::gamma(c + gk));
    out = out.divide(GammaExpr::gamma(c + jsum + g_below));
    out = out.scale(pochhammer(gk, c) * pochhammer(gk, c) / factorial_rational(c));
    if (jk1 % 2 == 1) out = out.scale((c + gk) / (c + jsum + g_below));
    return out;
}

}  // namespace

NormalizationConstants normalization_constants(const WavefunctionLabel& label,
                                               const ModelParams& params, int precision_digits,
                                               Convention conv) {
    const int n = params.dimension();
    if (static_cast<int>(label.j.size()) != n - 1)
        throw std::invalid_argument("normalization_constants: label length must be n-1");
    const long bits = BigFloat::bits_for_digits(precision_digits);

    NormalizationConstants out{BigFloat(bits), {}, BigFloat(bits)};
    out.nu1 = nu1_squared(label, params).value(precision_digits).sqrt();
    BigFloat full = out.nu1 / BigFloat(Rational(2), bits).sqrt();
    for (int k = 3; k <= n; ++k) {
        out.eta.push_back(eta_squared(k, label, params, conv).value(precision_digits).sqrt());
        full = full * out.eta.back();
    }
    out.full_constant = full;
    return out;
}

BigFloat unit_norm_defect(const WavefunctionLabel& label, const ModelParams& params,
                          int precision_digits, Convention conv) {
    const long bits = BigFloat::bits_for_digits(precision_digits);
    const LaurentPoly psi = closed_form_psi(label, params);
    const GammaSum norm_sq = inner_product(psi, psi, params);
    const auto constants = normalization_constants(label, params, precision_digits, conv);
    const BigFloat scaled = constants.full_constant * constants.full_constant *
                            norm_sq.value(precision_digits);
    const BigFloat one(Rational(1), bits);
    return (scaled - one).abs();
}

}  // namespace dunklbi
