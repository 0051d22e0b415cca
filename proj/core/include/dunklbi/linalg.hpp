#ifndef DUNKLBI_LINALG_HPP
#define DUNKLBI_LINALG_HPP

#include <optional>
#include <vector>

#include "dunklbi/rational.hpp"

namespace dunklbi {

// Dense rational matrix, row-major.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank over the rationals, computed with fraction-free (Bareiss) elimination
// on the denominator-cleared integer matrix.
int exact_rank(const RationalMatrix& m);

// Solves M x = rhs for a matrix with full column rank. Returns nullopt when
// the system is inconsistent; throws std::invalid_argument when the columns
// are linearly dependent (the solution would not be unique).
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& m,
                                                 const std::vector<Rational>& rhs);

// Basis of the right null space of M (columns x with M x = 0).
std::vector<std::vector<Rational>> null_space(const RationalMatrix& m);

}  // namespace dunklbi

#endif
