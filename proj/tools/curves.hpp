#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "inversepoint/matrix.hpp"

namespace inversepoint::cli {

/// One sample of row i's solution set {x > 0 : x_i (M x)_i = 1}.
struct CurvePoint {
    std::size_t curve = 0;  // 1-based row index
    std::array<double, 3> coords{};
    /// False when f_i is undefined at the sampled coordinates (zero
    /// diagonal and zero off-diagonal weight); coords[curve - 1] is then
    /// meaningless.
    bool valid = true;
};

/// Samples each row's curve (n = 2) or surface (n = 3) through the
/// parameterization x_i = f_i(other coordinates), with the free coordinates
/// on `samples` uniform steps t_max * k / samples, k = 1..samples.
/// Throws DimensionError for n outside {2, 3}.
std::vector<CurvePoint> sample_curves(const Matrix& m, std::size_t samples, double t_max);

/// CSV with header "curve_index,x1,x2[,x3],valid"; the undefined
/// coordinate of an invalid sample is left empty.
std::string curves_csv(const std::vector<CurvePoint>& points, std::size_t n);

}  // namespace inversepoint::cli
