#include "inversepoint/fixed_point.hpp"

#include <cmath>
#include <string>

#include "inversepoint/errors.hpp"

namespace inversepoint {

namespace {

void require_nonnegative(std::span<const double> v, const char* what) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!(v[k] >= 0.0) || !std::isfinite(v[k])) {
            throw DomainError(std::string(what) + ": entry " + std::to_string(k + 1) +
                              " must be finite and nonnegative");
        }
    }
}

}  // namespace

RowContext RowContext::from_matrix(const Matrix& m, std::size_t i) {
    const std::size_t n = m.size();
    if (i >= n) {
        throw DimensionError("row index out of range");
    }
    RowContext ctx;
    ctx.row_index = i;
    ctx.diagonal = m(i, i);
    ctx.off_diagonal.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (j != i) ctx.off_diagonal.push_back(m(i, j));
    }
    if (ctx.diagonal < 0.0) {
        throw NonNegativityError(i, i);
    }
    require_nonnegative(ctx.off_diagonal, "row context");
    return ctx;
}

double positive_root(double diagonal, double b, std::size_t row) {
    if (diagonal == 0.0) {
        if (!(b > 0.0)) throw ZeroRowError(row);
        return 1.0 / b;
    }
    return 2.0 / (b + std::sqrt(b * b + 4.0 * diagonal));
}

double b_value(const RowContext& ctx, std::span<const double> others) {
    if (others.size() != ctx.off_diagonal.size()) {
        throw DimensionError("b_value: expected " + std::to_string(ctx.off_diagonal.size()) +
                             " coordinates, got " + std::to_string(others.size()));
    }
    double b = 0.0;
    for (std::size_t k = 0; k < others.size(); ++k) b += ctx.off_diagonal[k] * others[k];
    return b;
}

double f_value(const RowContext& ctx, std::span<const double> others) {
    require_nonnegative(others, "f_value");
    return positive_root(ctx.diagonal, b_value(ctx, others), ctx.row_index);
}

std::vector<double> f_gradient(const RowContext& ctx, std::span<const double> others) {
    require_nonnegative(others, "f_gradient");
    const double b = b_value(ctx, others);
    double scale;
    if (ctx.diagonal == 0.0) {
        if (!(b > 0.0)) throw ZeroRowError(ctx.row_index);
        scale = -1.0 / (b * b);
    } else {
        const double root = std::sqrt(b * b + 4.0 * ctx.diagonal);
        // b / root - 1 == -4 m_ii / (root (root + b)); the right side keeps
        // relative accuracy when b dominates.
        scale = -2.0 / (root * (root + b));
    }
    std::vector<double> grad(ctx.off_diagonal.size());
    for (std::size_t k = 0; k < grad.size(); ++k) grad[k] = scale * ctx.off_diagonal[k];
    return grad;
}

PositiveVector fixed_point_map(const Matrix& m, std::span<const double> x) {
    const std::size_t n = m.size();
    if (x.size() != n) {
        throw DimensionError("fixed_point_map: dimension mismatch");
    }
    require_nonnegative(x, "fixed_point_map");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = m.row(i);
        double b = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) b += r[j] * x[j];
        }
        out[i] = positive_root(r[i], b, i);
    }
    return PositiveVector(std::move(out));
}

double residual(const Matrix& m, std::span<const double> x) {
    const auto mx = matvec(m, x);
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(x[i] * mx[i] - 1.0));
    return r;
}

}  // namespace inversepoint
