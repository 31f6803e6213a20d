#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace inversepoint {

/// Absolute pivot magnitude below which elimination reports a singular system.
inline constexpr double kSingularPivot = 1e-300;

/// Solves A y = rhs by Gaussian elimination with partial pivoting.
///
/// `a` is n*n row-major and is taken by value (it is overwritten by the
/// factorization). Throws SingularJacobianError when a pivot falls below
/// kSingularPivot and DimensionError on size mismatch.
std::vector<double> solve_dense(std::vector<double> a, std::span<const double> rhs);

}  // namespace inversepoint
