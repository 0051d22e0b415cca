#ifndef DUNKLBI_CK_HPP
#define DUNKLBI_CK_HPP

#include <vector>

#include "dunklbi/laurent.hpp"
#include "dunklbi/model.hpp"
#include "dunklbi/params.hpp"

namespace dunklbi {

// Compositions (j_1, ..., j_parts) of total into non-negative parts, in
// colexicographic order (the last part varies slowest).
std::vector<std::vector<int>> compositions_colex(int total, int parts);

// One-variable extension into the kernel of the Dunkl-Dirac operator: maps a
// homogeneous polynomial p in s_1..s_{k-1} to the unique homogeneous
// polynomial in s_1..s_k that agrees with p at s_k = 0 and is annihilated by
// D_{[k]}. Built from the terminating series
//   sum_i (-1)^i s_k^{2i} / (i! (g_k)_i 4^i) D_{[k-1]}^{2i}
// + sum_i (-1)^{i+1} s_k^{2i+1} / (i! (g_k)_{i+1} 2·4^i) R_{[k-1]} D_{[k-1]}^{2i+1},
// g_k = mu_k + 1/2. A redundant kernel check guards the construction.
LaurentPoly ck_extend(const LaurentPoly& p, int axis_k, const ModelParams& params);

// Nested-extension basis of the kernel space K_m = ker D_{[n]} within the
// homogeneous polynomials of degree m.
struct KernelBasis {
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> labels;   // compositions of m into n-1 parts
    std::vector<LaurentPoly> elements;      // same order as labels
};

KernelBasis kernel_basis(int n, int m, const ModelParams& params);

// Components h_0..h_m of the direct-sum decomposition
// P_m = ⊕_j x_{[n]}^j K_{m-j}: p = sum_j x_{[n]}^j h_j with h_j in K_{m-j}.
// Solved as an exact rational linear system in the monomial basis.
std::vector<LaurentPoly> fischer_decompose(const LaurentPoly& p, const ModelParams& params);

// dim K_m = C(m+n-2, n-2); dim P_m = C(m+n-1, n-1).
long kernel_dimension(int n, int m);
long homogeneous_dimension(int n, int m);

}  // namespace dunklbi

#endif
