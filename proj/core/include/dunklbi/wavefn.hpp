#ifndef DUNKLBI_WAVEFN_HPP
#define DUNKLBI_WAVEFN_HPP

#include <vector>

#include "dunklbi/bigfloat.hpp"
#include "dunklbi/ck.hpp"
#include "dunklbi/laurent.hpp"
#include "dunklbi/model.hpp"

namespace dunklbi {

// Label (m; j_1..j_{n-1}) of a separated basis element, sum j_i = m.
struct WavefunctionLabel {
    int m = 0;
    std::vector<int> j;

    explicit WavefunctionLabel(std::vector<int> parts);
    static std::vector<WavefunctionLabel> all(int n, int m);  // colex order
    std::string to_string() const;                            // "(1,0,2)"
};

// Formula conventions: `corrected` applies the documented index fixes (the
// odd-branch Jacobi parameter of the tower operators reads gamma_k, the
// normalization factors are indexed by their own level, the level-n
// Hamiltonian constant follows from the algebra); `as_printed` keeps the
// n=4-specific forms verbatim for documentation runs.
enum class Convention { corrected, as_printed };

// Separated wavefunction in closed form: nested Jacobi-type operators applied
// to the two-variable seed function.
LaurentPoly closed_form_psi(const WavefunctionLabel& label, const ModelParams& params,
                            Convention conv = Convention::corrected);

// Comparison of the closed form against the nested-extension basis element
// with the same label.
struct CrossValidation {
    enum class Outcome { exact, proportional, mismatch };
    Outcome outcome = Outcome::mismatch;
    Rational ratio = 0;  // closed form = ratio * extension element
    std::string describe() const;
};

CrossValidation cross_validate(const WavefunctionLabel& label, const ModelParams& params);

// Exact eigenvalues of the full-set sCasimir and of the Hamiltonian on the
// closed-form wavefunction, extracted from the images themselves. Throws
// std::runtime_error (message carries the residual) when the wavefunction is
// not an exact eigenfunction.
struct EigenPair {
    Rational scasimir_eigenvalue;
    Rational hamiltonian_eigenvalue;
};

EigenPair eigen_check(const WavefunctionLabel& label, const ModelParams& params);

// Normalization data evaluated with arbitrary-precision Gamma: the seed
// factor nu_1, the tower factors eta_3..eta_n, and the full constant
// nu_1/sqrt(2) * prod eta_k. The squared factors are exact Gamma-ratio
// expressions; square roots are taken at the requested precision.
struct NormalizationConstants {
    BigFloat nu1;
    std::vector<BigFloat> eta;  // eta_3..eta_n, empty for n = 2
    BigFloat full_constant;
};

NormalizationConstants normalization_constants(const WavefunctionLabel& label,
                                               const ModelParams& params, int precision_digits,
                                               Convention conv = Convention::corrected);

// Weighted squared norm of the normalized wavefunction: must be 1 within
// tolerance. Returns |norm^2 - 1| at the requested precision.
BigFloat unit_norm_defect(const WavefunctionLabel& label, const ModelParams& params,
                          int precision_digits, Convention conv = Convention::corrected);

}  // namespace dunklbi

#endif
