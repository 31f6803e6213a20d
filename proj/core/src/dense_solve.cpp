#include "inversepoint/dense_solve.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "inversepoint/errors.hpp"

namespace inversepoint {

std::vector<double> solve_dense(std::vector<double> a, std::span<const double> rhs) {
    const std::size_t n = rhs.size();
    if (a.size() != n * n) {
        throw DimensionError("solve_dense: matrix/rhs size mismatch");
    }
    std::vector<double> y(rhs.begin(), rhs.end());

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a[i * n + k]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (!(best >= kSingularPivot)) {
            throw SingularJacobianError("singular system: pivot " + std::to_string(best) +
                                        " in column " + std::to_string(k + 1));
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            std::swap(y[k], y[p]);
        }
        const double pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = a[i * n + k] / pivot;
            if (factor == 0.0) continue;
            a[i * n + k] = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
            y[i] -= factor * y[k];
        }
    }

    for (std::size_t k = n; k-- > 0;) {
        double s = y[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a[k * n + j] * y[j];
        y[k] = s / a[k * n + k];
    }
    return y;
}

}  // namespace inversepoint
