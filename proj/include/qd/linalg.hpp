#pragma once

#include <optional>
#include <vector>

#include "qd/rational.hpp"

namespace qd {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row major, rectangular

/* Basis of the right kernel {v : A v = 0}, computed exactly.
 * Rows are cleared to integers and reduced by fraction-free (Bareiss)
 * elimination with first-nonzero pivoting; pivot variables are then
 * back-substituted over the rationals, one basis vector per free column
 * (that column's entry set to 1). Deterministic output order. */
std::vector<RatVec> kernel_basis(const RatMat& A);

/* Exact rank via the same elimination. */
int matrix_rank(const RatMat& A);

/* One exact solution of A v = b with all free variables set to zero;
 * nullopt when the system is inconsistent. */
std::optional<RatVec> solve_particular(const RatMat& A, const RatVec& b);

}  // namespace qd
