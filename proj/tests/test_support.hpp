#ifndef DUNKLBI_TEST_SUPPORT_HPP
#define DUNKLBI_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "dunklbi/laurent.hpp"
#include "dunklbi/operator_expr.hpp"

namespace dunklbi::testing {

// Deterministic random rationals and polynomials for property tests.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    Rational rational(int num_range = 9, int max_den = 7) {
        int num = uniform_int(-num_range, num_range);
        int den = uniform_int(1, max_den);
        return make_rational(num, den);
    }

    Rational nonnegative_rational(int num_range = 9, int max_den = 7) {
        int num = uniform_int(0, num_range);
        int den = uniform_int(1, max_den);
        return make_rational(num, den);
    }

    // Random Laurent polynomial with the given number of terms.
    LaurentPoly laurent(int dim, int terms, int exp_lo = -3, int exp_hi = 4) {
        LaurentPoly p = LaurentPoly::zero(dim);
        for (int t = 0; t < terms; ++t) {
            ExponentVector e(dim);
            for (int i = 0; i < dim; ++i) e[i] = uniform_int(exp_lo, exp_hi);
            p += LaurentPoly::monomial(e, rational());
        }
        return p;
    }

    // Random homogeneous polynomial of exact degree m (nonzero).
    LaurentPoly homogeneous(int dim, int m) {
        auto mons = monomials_of_degree(dim, m);
        LaurentPoly p = LaurentPoly::zero(dim);
        while (p.is_zero()) {
            for (const auto& e : mons) {
                if (uniform_int(0, 2) == 0) continue;
                Rational c = rational();
                if (c == 0) c = 1;
                p += LaurentPoly::monomial(e, c);
            }
        }
        return p;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace dunklbi::testing

#endif
