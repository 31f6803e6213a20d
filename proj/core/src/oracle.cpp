#include "inversepoint/oracle.hpp"

#include <cmath>
#include <vector>

#include "inversepoint/errors.hpp"

namespace inversepoint::oracle {

namespace {

constexpr double kLow = 1e-12;
constexpr double kHigh = 1e6;

// Root of diag*t^2 + b*t - 1 in [kLow, kHigh]; the polynomial is increasing
// there, so plain bisection to adjacent doubles suffices.
double bisect_root(double diag, double b) {
    auto g = [&](double t) { return (diag * t + b) * t - 1.0; };
    double lo = kLow;
    double hi = kHigh;
    if (g(hi) <= 0.0) return hi;
    if (g(lo) >= 0.0) return lo;
    while (true) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if (g(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
}

double max_defect(const Matrix& m, const std::vector<double>& x) {
    const std::size_t n = m.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += m(i, j) * x[j];
        worst = std::fmax(worst, std::abs(x[i] * s - 1.0));
    }
    return worst;
}

}  // namespace

PositiveVector oracle_solve(const Matrix& m, double tol, std::size_t max_sweeps) {
    const std::size_t n = m.size();
    if (n > kMaxDimension) {
        throw PreconditionError("oracle is limited to n <= 5");
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) < 0.0) throw NonNegativityError(i, j);
            any = any || m(i, j) > 0.0;
        }
        if (!any) throw ZeroRowError(i);
    }

    std::vector<double> x(n, 1.0);
    double defect = max_defect(m, x);
    for (std::size_t sweep = 0; sweep < max_sweeps && defect > tol; ++sweep) {
        for (std::size_t i = 0; i < n; ++i) {
            double b = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) b += m(i, j) * x[j];
            }
            x[i] = bisect_root(m(i, i), b);
        }
        defect = max_defect(m, x);
    }
    if (defect > tol) throw OracleDivergenceError(defect, max_sweeps);
    return PositiveVector(std::move(x));
}

}  // namespace inversepoint::oracle
