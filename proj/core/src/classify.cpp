#include "inversepoint/classify.hpp"

#include <algorithm>
#include <cmath>

#include "inversepoint/errors.hpp"

namespace inversepoint {

namespace {

using Pattern = std::vector<char>;

Pattern boolean_square(const Pattern& p, std::size_t n) {
    Pattern out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!p[i * n + k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (p[k * n + j]) out[i * n + j] = 1;
            }
        }
    }
    return out;
}

}  // namespace

bool is_nonnegative(const Matrix& m) noexcept {
    return std::ranges::all_of(m.entries(), [](double v) { return v >= 0.0; });
}

bool is_primitive(const Matrix& m) {
    if (!is_nonnegative(m)) return false;
    const std::size_t n = m.size();
    Pattern p(n * n);
    std::ranges::transform(m.entries(), p.begin(), [](double v) { return v > 0.0 ? 1 : 0; });

    // Primitive iff M^k > 0 for every k >= (n-1)^2 + 1, so one power 2^s at or
    // past that bound decides it.
    const std::size_t wielandt = (n - 1) * (n - 1) + 1;
    std::size_t power = 1;
    while (power < wielandt) {
        p = boolean_square(p, n);
        power *= 2;
    }
    return std::ranges::all_of(p, [](char c) { return c != 0; });
}

bool has_positive_diagonal(const Matrix& m) noexcept {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!(m(i, i) > 0.0)) return false;
    }
    return true;
}

bool has_zero_row(const Matrix& m) noexcept {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (std::ranges::all_of(m.row(i), [](double v) { return v == 0.0; })) return true;
    }
    return false;
}

ContractionCheck contraction_condition(const Matrix& m) noexcept {
    const std::size_t n = m.size();
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double twice_diag = 2.0 * m(i, i);
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (v < 0.0 || !(twice_diag > v)) return {};
            c = std::max(c, v / twice_diag);
        }
    }
    if (!(c < 1.0)) return {};
    return {true, c};
}

PerronResult perron_vector(const Matrix& m, double tol, std::size_t max_iter) {
    if (!is_primitive(m)) throw NotPrimitiveError();

    const std::size_t n = m.size();
    std::vector<double> v(n, 1.0);
    double best_defect = INFINITY;
    std::vector<double> best = v;

    for (std::size_t it = 1; it <= max_iter; ++it) {
        const auto w = matvec(m, v);
        const double lambda = inf_norm(w);
        double defect = 0.0;
        for (std::size_t i = 0; i < n; ++i) defect = std::max(defect, std::abs(w[i] - lambda * v[i]));
        if (defect <= tol) {
            return {PositiveVector(std::move(v)), lambda, it};
        }
        if (defect < best_defect) {
            best_defect = defect;
            best = v;
        }
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / lambda;
    }
    throw ConvergenceError("power iteration did not converge", std::move(best), best_defect,
                           max_iter, "power");
}

Classification classify(const Matrix& m) {
    Classification c;
    c.nonnegative = is_nonnegative(m);
    c.positive_diagonal = has_positive_diagonal(m);
    c.primitive = is_primitive(m);
    const auto cc = contraction_condition(m);
    c.contraction_condition = cc.holds;
    c.contraction_constant = cc.constant;
    c.has_zero_row = has_zero_row(m);
    return c;
}

}  // namespace inversepoint
