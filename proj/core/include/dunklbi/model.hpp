#ifndef DUNKLBI_MODEL_HPP
#define DUNKLBI_MODEL_HPP

#include "dunklbi/operator_expr.hpp"
#include "dunklbi/params.hpp"

namespace dunklbi {

// Convention for the reflection product attached to each summand of the
// subset realization: over all axes below i (full) or only those in A
// (restricted). `full` is the faithful reading and the default everywhere.
enum class ReflectionPrefix { full, restricted };

// Gauged Dunkl operator D_i = d_i + (mu_i/s_i)(1 - R_i).
OperatorExpr dunkl_d(int axis, const ModelParams& params);

// Gauged Euler-type operator E_i = s_i d_i + gamma_i.
OperatorExpr dunkl_e(int axis, const ModelParams& params);

// The five operators of the subset realization labelled by nonempty A:
// dirac  D_A = sum_{i in A} D_i prod_{j<i} R_j
// coord  x_A = sum_{i in A} s_i prod_{j<i} R_j
// euler  E_A = sum_{i in A} E_i
// refl   R_A = prod_{i in A} R_i
// r2     |x_A|^2 = sum_{i in A} s_i^2
struct SubsetRealization {
    OperatorExpr dirac;
    OperatorExpr coord;
    OperatorExpr euler;
    OperatorExpr refl;
    OperatorExpr r2;
};

SubsetRealization subset_realization(const SubsetLabel& a, const ModelParams& params,
                                     ReflectionPrefix prefix = ReflectionPrefix::full);

// sCasimir S_A = ([D_A, x_A] - 1)/2; S_empty = -1/2.
OperatorExpr scasimir(const SubsetLabel& a, const ModelParams& params,
                      ReflectionPrefix prefix = ReflectionPrefix::full);

// Casimir Q_A = S_A R_A, with the scalar conventions Q_empty = -1/2 and
// Q_{i} = mu_i.
OperatorExpr casimir(const SubsetLabel& a, const ModelParams& params,
                     ReflectionPrefix prefix = ReflectionPrefix::full);

// Conserved quantity M_A built from angular momenta and reflections, with
// -i J_{jk} realized as s_k d_j - s_j d_k, returned in the gauged picture.
// Singletons give the scalar mu_i.
OperatorExpr symmetry_m(const SubsetLabel& a, const ModelParams& params);

// Gauged Hamiltonian S^2 - S - (n-1)(n-3)/4 with S the full-set sCasimir.
OperatorExpr hamiltonian(const ModelParams& params,
                         ReflectionPrefix prefix = ReflectionPrefix::full);

// Gauged right-hand side of the Hamiltonian identity:
// sum_{i<j} J_ij^2 + (sum_i s_i^2) sum_i (mu_i/s_i^2)(mu_i - R_i),
// with J_ij^2 realized as -(s_i d_j - s_j d_i)^2.
OperatorExpr hamiltonian_rhs(const ModelParams& params);

// The part of hamiltonian_rhs built from the potential alone (with the
// (sum s_i^2) factor); maps some polynomials outside the polynomial ring,
// unlike the combined right-hand side.
OperatorExpr hamiltonian_rhs_potential_part(const ModelParams& params);

// Structure constants side of the anticommutation relation:
// Q_{A xor B} + 2 Q_{A&B} Q_{A|B} + 2 Q_{A\B} Q_{B\A}.
OperatorExpr bi_rhs(const SubsetLabel& a, const SubsetLabel& b, const ModelParams& params,
                    ReflectionPrefix prefix = ReflectionPrefix::full);

// Expected eigenvalue of the full-set sCasimir on a kernel element of
// degree m: m + gamma_[n] - 1/2.
Rational scasimir_eigenvalue(int m, const ModelParams& params);

// Expected eigenvalue of the gauged Hamiltonian on a kernel element of
// degree m: (m + gamma_[n] - n/2)(m + gamma_[n] + n/2 - 2), i.e.
// (m + sum mu)(m + sum mu + n - 2). Reduces to the classical sphere
// spectrum m(m+n-2) at mu = 0.
Rational hamiltonian_eigenvalue(int m, const ModelParams& params);

// The n = 4 specialization (m + gamma_[n])(m + gamma_[n] - 2) generalized
// verbatim to every n; differs from hamiltonian_eigenvalue unless n = 4.
// Kept for the strict-as-printed mode.
Rational hamiltonian_eigenvalue_printed(int m, const ModelParams& params);

}  // namespace dunklbi

#endif
