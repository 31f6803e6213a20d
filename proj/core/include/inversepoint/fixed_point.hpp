#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "inversepoint/matrix.hpp"

namespace inversepoint {

/// Row i of M split into the diagonal entry and the off-diagonal entries
/// (j != i, increasing j). Row i of the system x_i (M x)_i = 1 reads
/// m_ii x_i^2 + b_i x_i - 1 = 0 with b_i = sum_{j != i} m_ij x_j.
struct RowContext {
    std::size_t row_index = 0;
    double diagonal = 0.0;
    std::vector<double> off_diagonal;

    /// Throws DomainError on a negative entry.
    static RowContext from_matrix(const Matrix& m, std::size_t i);
};

/// Positive root of diagonal * t^2 + b * t - 1 = 0 for diagonal, b >= 0.
///
/// Uses 2 / (b + sqrt(b^2 + 4 diagonal)), which avoids the cancellation of
/// the textbook form when b^2 >> diagonal. Throws ZeroRowError(row) when both
/// coefficients vanish.
double positive_root(double diagonal, double b, std::size_t row = 0);

/// b_i = sum_{j != i} m_ij x_j, where `others` is x with coordinate i removed.
double b_value(const RowContext& ctx, std::span<const double> others);

/// f_i: the positive solution x_i of row i given the other coordinates.
double f_value(const RowContext& ctx, std::span<const double> others);

/// Gradient of f_i with respect to the n-1 other coordinates. Every
/// component is <= 0.
std::vector<double> f_gradient(const RowContext& ctx, std::span<const double> others);

/// F(x) = (f_1(x without x_1), ..., f_n(x without x_n)).
///
/// `x` must be nonnegative. Throws ZeroRowError naming the first row whose
/// diagonal is zero and whose off-diagonal weight b_i vanishes at x.
PositiveVector fixed_point_map(const Matrix& m, std::span<const double> x);
inline PositiveVector fixed_point_map(const Matrix& m, const PositiveVector& x) {
    return fixed_point_map(m, x.values());
}

/// max_i |x_i (M x)_i - 1|.
double residual(const Matrix& m, std::span<const double> x);
inline double residual(const Matrix& m, const PositiveVector& x) {
    return residual(m, x.values());
}

}  // namespace inversepoint
