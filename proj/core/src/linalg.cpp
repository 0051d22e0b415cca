#include "dunklbi/linalg.hpp"

#include <stdexcept>

namespace dunklbi {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Clears denominators row by row; row scaling preserves rank and the
// solution set of M x = rhs when rhs rows are scaled alongside.
IntMatrix clear_denominators(const RationalMatrix& m) {
    IntMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Integer lcm = 1;
        for (const auto& q : m[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        out[i].reserve(m[i].size());
        for (const auto& q : m[i]) {
            Rational scaled = q * Rational(lcm);
            out[i].push_back(scaled.get_num());
        }
    }
    return out;
}

// In-place fraction-free elimination. Returns the pivot columns; after the
// call, `a` is in row echelon form up to row scaling by previous pivots.
std::vector<int> bareiss(IntMatrix& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivot_cols;
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Integer t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

int exact_rank(const RationalMatrix& m) {
    if (m.empty()) return 0;
    IntMatrix a = clear_denominators(m);
    return static_cast<int>(bareiss(a).size());
}

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& m,
                                                 const std::vector<Rational>& rhs) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0 || rhs.size() != m.size())
        throw std::invalid_argument("solve_exact: shape mismatch");
    const int cols = static_cast<int>(m[0].size());

    // Augment before clearing denominators so both sides share row scalings.
    RationalMatrix aug(rows);
    for (int i = 0; i < rows; ++i) {
        aug[i] = m[i];
        aug[i].push_back(rhs[i]);
    }
    IntMatrix a = clear_denominators(aug);
    auto pivots = bareiss(a);

    bool rhs_pivot = !pivots.empty() && pivots.back() == cols;
    if (rhs_pivot) return std::nullopt;  // inconsistent
    if (static_cast<int>(pivots.size()) < cols)
        throw std::invalid_argument("solve_exact: columns are linearly dependent");

    // Back substitution over the rationals on the echelon form.
    std::vector<Rational> x(cols, Rational(0));
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
        const int c = pivots[r];
        Rational acc(a[r][cols]);
        for (int j = c + 1; j < cols; ++j) acc -= Rational(a[r][j]) * x[j];
        x[c] = acc / Rational(a[r][c]);
    }
    return x;
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return {};
    const int cols = static_cast<int>(m[0].size());
    IntMatrix a = clear_denominators(m);
    auto pivots = bareiss(a);

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[free] = 1;
        for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
            const int c = pivots[r];
            Rational acc(0);
            for (int j = c + 1; j < cols; ++j)
                if (a[r][j] != 0) acc -= Rational(a[r][j]) * x[j];
            x[c] = acc / Rational(a[r][c]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace dunklbi
