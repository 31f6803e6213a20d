#include "inversepoint/stochastic.hpp"

#include <algorithm>
#include <cmath>

#include "inversepoint/fixed_point.hpp"

namespace inversepoint {

StochasticCertificate certify(const Matrix& m, const PositiveVector& x) {
    StochasticCertificate cert;

    const Matrix scaled = diag_sandwich(m, x);
    const std::size_t n = m.size();
    cert.row_sums.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (double v : scaled.row(i)) s += v;
        cert.row_sums[i] = s;
        cert.max_row_sum_defect = std::max(cert.max_row_sum_defect, std::abs(s - 1.0));
    }

    cert.eq2_defect = residual(m, x);

    const auto mx = matvec(m, x);
    const auto inv = inverse_elementwise(x);
    cert.inverse_defect = inf_distance(mx, inv.values());
    return cert;
}

}  // namespace inversepoint
