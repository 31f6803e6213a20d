#pragma once

#include <vector>

#include "inversepoint/matrix.hpp"

namespace inversepoint {

/// Defects of the three equivalent characterizations of a solution x:
///   M x = (1/x_1, ..., 1/x_n),
///   diag(x) M diag(x) is row-stochastic,
///   x_i (M x)_i = 1 for every i.
struct StochasticCertificate {
    std::vector<double> row_sums;    // of diag(x) M diag(x)
    double max_row_sum_defect = 0.0; // max_i |row_sums_i - 1|
    double eq2_defect = 0.0;         // residual(M, x)
    double inverse_defect = 0.0;     // ||M x - 1/x||_inf
};

/// Evaluates all three defects independently. Throws DimensionError on a
/// size mismatch.
StochasticCertificate certify(const Matrix& m, const PositiveVector& x);

}  // namespace inversepoint
