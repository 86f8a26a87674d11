#pragma once

#include <optional>
#include <vector>

#include "realrank/interval.hpp"
#include "realrank/rational.hpp"

namespace realrank {

using MatQ = std::vector<std::vector<Rational>>;
using VecQ = std::vector<Rational>;

/// Exact determinant by rational Gaussian elimination (destroys its copy).
Rational determinant(MatQ m);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(MatQ& m);

/// Kernel basis in reduced echelon convention: one vector per free column in
/// ascending column order, with a 1 in the free coordinate. Deterministic.
std::vector<VecQ> kernel_basis(const MatQ& m, int cols);

int rank(MatQ m);

/// Solves (m + [-r,r] perturbations handled by caller) x = b with interval
/// entries; fails if no sign-definite pivot is available.
std::optional<std::vector<Interval>> interval_solve(std::vector<std::vector<Interval>> m,
                                                    std::vector<Interval> b);

}  // namespace realrank
