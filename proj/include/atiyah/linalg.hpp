#pragma once

#include <optional>

#include "atiyah/matrix.hpp"

namespace atiyah {

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SnfResult {
    MatS U, D, V;
};

SnfResult smith_normal_form(const MatS& M);  // base ring Z

/// Rank over the fraction field (exact).
int rank_of(const MatS& M);

/// Columns form a basis of ker M. Over Z the basis spans the saturated
/// kernel lattice (computed via SNF); over Q/F_p it is a Gauss kernel basis.
MatS kernel_basis(const MatS& M);

/// Solve A X = B exactly in the base ring (integral solution over Z).
std::optional<MatS> solve_exact(const MatS& A, const MatS& B);

/// Diagonal of the Smith form restricted to nonzero entries (over Z).
std::vector<Int> elementary_divisors(const MatS& M);

}  // namespace atiyah
