#include "dunklbi/ck.hpp"

#include <stdexcept>

#include "dunklbi/linalg.hpp"

namespace dunklbi {

namespace {

void compositions_rec(int total, int pos, std::vector<int>& scratch,
                      std::vector<std::vector<int>>& out) {
    if (pos == 0) {
        scratch[0] = total;
        out.push_back(scratch);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        scratch[pos] = v;
        compositions_rec(total - v, pos - 1, scratch, out);
    }
}

SubsetLabel prefix_subset(int k) {
    std::vector<int> axes(k);
    for (int i = 0; i < k; ++i) axes[i] = i + 1;
    return SubsetLabel(std::move(axes));
}

}  // namespace

std::vector<std::vector<int>> compositions_colex(int total, int parts) {
    if (parts < 1 || total < 0) throw std::invalid_argument("compositions_colex: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> scratch(parts, 0);
    compositions_rec(total, parts - 1, scratch, out);
    return out;
}

LaurentPoly ck_extend(const LaurentPoly& p, int axis_k, const ModelParams& params) {
    const int n = params.dimension();
    if (axis_k < 2 || axis_k > n) throw std::invalid_argument("ck_extend: axis out of range");
    if (!p.is_polynomial()) throw std::invalid_argument("ck_extend: input must be a polynomial");
    if (!p.is_homogeneous())
        throw std::invalid_argument("ck_extend: input must be homogeneous; decompose first");
    for (int i = axis_k; i <= n; ++i)
        if (!p.independent_of(i))
            throw std::invalid_argument("ck_extend: input may only involve axes below the target");
    if (p.is_zero()) return p;

    const auto below = subset_realization(prefix_subset(axis_k - 1), params);
    const Rational gk = params.gamma(axis_k);

    LaurentPoly out = LaurentPoly::zero(n);
    LaurentPoly dpow = p;  // D_{[k-1]}^alpha p
    for (int alpha = 0; !dpow.is_zero(); ++alpha) {
        const int i = alpha / 2;
        Rational coeff;
        LaurentPoly image = dpow;
        if (alpha % 2 == 0) {
            coeff = rational_pow(Rational(-1), i) /
                    (factorial_rational(i) * pochhammer(gk, i) * rational_pow(Rational(4), i));
        } else {
            coeff = rational_pow(Rational(-1), i + 1) /
                    (factorial_rational(i) * pochhammer(gk, i + 1) * Rational(2) *
                     rational_pow(Rational(4), i));
            image = below.refl.apply(image);
        }
        out += image.mul_var(axis_k, alpha) * coeff;
        dpow = below.dirac.apply(dpow);
    }

    const auto upto = subset_realization(prefix_subset(axis_k), params);
    if (!upto.dirac.apply(out).is_zero())
        throw std::logic_error("ck_extend: series output escaped the kernel");
    return out;
}

KernelBasis kernel_basis(int n, int m, const ModelParams& params) {
    if (n != params.dimension()) throw std::invalid_argument("kernel_basis: dimension mismatch");
    if (m < 0) throw std::invalid_argument("kernel_basis: negative degree");
    KernelBasis basis;
    basis.n = n;
    basis.m = m;
    basis.labels = compositions_colex(m, n - 1);
    basis.elements.reserve(basis.labels.size());
    for (const auto& label : basis.labels) {
        LaurentPoly f = LaurentPoly::variable(n, 1, label[0]);
        for (int k = 2; k <= n; ++k) {
            f = ck_extend(f, k, params);
            if (k < n) {
                const auto coord = subset_realization(prefix_subset(k), params).coord;
                for (int t = 0; t < label[k - 1]; ++t) f = coord.apply(f);
            }
        }
        basis.elements.push_back(std::move(f));
    }
    return basis;
}

std::vector<LaurentPoly> fischer_decompose(const LaurentPoly& p, const ModelParams& params) {
    const int n = params.dimension();
    if (p.dim() != n) throw std::invalid_argument("fischer_decompose: dimension mismatch");
    if (!p.is_polynomial()) throw std::invalid_argument("fischer_decompose: input must be a polynomial");
    if (!p.is_homogeneous() || p.is_zero())
        throw std::invalid_argument("fischer_decompose: input must be homogeneous and nonzero");
    const int m = p.degree().value();

    const auto coord = subset_realization(prefix_subset(n), params).coord;
    const auto rows = monomials_of_degree(n, m);
    std::map<ExponentVector, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);

    // Columns: x^j h for h running over the nested basis of K_{m-j}.
    std::vector<KernelBasis> bases;
    std::vector<LaurentPoly> columns;
    std::vector<std::pair<int, std::size_t>> column_origin;  // (j, index within basis)
    for (int j = 0; j <= m; ++j) {
        bases.push_back(kernel_basis(n, m - j, params));
        for (std::size_t b = 0; b < bases[j].elements.size(); ++b) {
            LaurentPoly col = bases[j].elements[b];
            for (int t = 0; t < j; ++t) col = coord.apply(col);
            columns.push_back(std::move(col));
            column_origin.emplace_back(j, b);
        }
    }

    RationalMatrix mat(rows.size(), std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [e, v] : columns[c].terms()) mat[row_index.at(e)][c] = v;
    std::vector<Rational> rhs(rows.size(), Rational(0));
    for (const auto& [e, v] : p.terms()) rhs[row_index.at(e)] = v;

    std::optional<std::vector<Rational>> solution;
    try {
        solution = solve_exact(mat, rhs);
    } catch (const std::invalid_argument&) {
        solution.reset();
    }
    if (!solution)
        throw std::logic_error("fischer_decompose: singular system; the decomposition must exist");

    std::vector<LaurentPoly> parts(m + 1, LaurentPoly::zero(n));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& [j, b] = column_origin[c];
        parts[j] += bases[j].elements[b] * (*solution)[c];
    }
    return parts;
}

long kernel_dimension(int n, int m) {
    // C(m+n-2, n-2)
    long num = 1, den = 1;
    for (int i = 1; i <= n - 2; ++i) {
        num *= m + i;
        den *= i;
    }
    return num / den;
}

long homogeneous_dimension(int n, int m) {
    long num = 1, den = 1;
    for (int i = 1; i <= n - 1; ++i) {
        num *= m + i;
        den *= i;
    }
    return num / den;
}

}  // namespace dunklbi
