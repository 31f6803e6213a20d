#pragma once

#include <cstddef>

#include "inversepoint/matrix.hpp"

namespace inversepoint::oracle {

inline constexpr std::size_t kMaxDimension = 5;
inline constexpr std::size_t kMaxSweeps = 1'000'000;

/// Reference solution of x_i (M x)_i = 1 for small matrices.
///
/// Cyclic coordinate sweeps (i = 1..n) from the all-ones vector; each
/// coordinate is replaced by the positive root of its row's scalar quadratic,
/// located by bisection on [1e-12, 1e6]. Shares no code with the solver
/// beyond the Matrix type. Throws OracleDivergenceError if the residual does
/// not reach `tol` within `max_sweeps` sweeps.
PositiveVector oracle_solve(const Matrix& m, double tol, std::size_t max_sweeps = kMaxSweeps);

}  // namespace inversepoint::oracle
