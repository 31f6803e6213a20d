#include "curves.hpp"

#include "inversepoint/errors.hpp"
#include "inversepoint/fixed_point.hpp"
#include "inversepoint/io.hpp"

namespace inversepoint::cli {

std::vector<CurvePoint> sample_curves(const Matrix& m, std::size_t samples, double t_max) {
    const std::size_t n = m.size();
    if (n != 2 && n != 3) {
        throw DimensionError("curve sampling needs a 2x2 or 3x3 matrix, got n = " +
                             std::to_string(n));
    }
    if (samples == 0 || !(t_max > 0.0)) {
        throw PreconditionError("samples must be positive and t_max > 0");
    }

    std::vector<double> grid(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        grid[k] = t_max * static_cast<double>(k + 1) / static_cast<double>(samples);
    }

    std::vector<CurvePoint> points;
    for (std::size_t i = 0; i < n; ++i) {
        const auto ctx = RowContext::from_matrix(m, i);
        auto emit = [&](std::span<const double> others) {
            CurvePoint p;
            p.curve = i + 1;
            for (std::size_t j = 0, k = 0; j < n; ++j) {
                if (j != i) p.coords[j] = others[k++];
            }
            try {
                p.coords[i] = f_value(ctx, others);
            } catch (const ZeroRowError&) {
                p.valid = false;
            }
            points.push_back(p);
        };

        if (n == 2) {
            for (double t : grid) emit(std::array{t});
        } else {
            for (double a : grid) {
                for (double b : grid) emit(std::array{a, b});
            }
        }
    }
    return points;
}

std::string curves_csv(const std::vector<CurvePoint>& points, std::size_t n) {
    std::string out = n == 2 ? "curve_index,x1,x2,valid\n" : "curve_index,x1,x2,x3,valid\n";
    for (const auto& p : points) {
        out += std::to_string(p.curve);
        for (std::size_t j = 0; j < n; ++j) {
            out += ',';
            if (p.valid || j + 1 != p.curve) out += io::format_double(p.coords[j]);
        }
        out += p.valid ? ",1\n" : ",0\n";
    }
    return out;
}

}  // namespace inversepoint::cli
