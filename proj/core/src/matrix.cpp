#include "inversepoint/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "inversepoint/errors.hpp"

namespace inversepoint {

Matrix::Matrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) {
        throw DimensionError("matrix dimension must be at least 1");
    }
    if (entries_.size() != n_ * n_) {
        throw DimensionError("expected " + std::to_string(n_ * n_) +
                             " entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!std::isfinite(entries_[k])) {
            throw DomainError("non-finite entry at (" + std::to_string(k / n_ + 1) +
                              ", " + std::to_string(k % n_ + 1) + ")");
        }
    }
}

namespace {

std::vector<double> flatten(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<double> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& r : rows) {
        if (r.size() != rows.size()) {
            throw DimensionError("matrix rows must have length " +
                                 std::to_string(rows.size()));
        }
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return flat;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : Matrix(rows.size(), flatten(rows)) {}

Matrix Matrix::identity(std::size_t n) {
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return Matrix(n, std::move(e));
}

Matrix Matrix::zero(std::size_t n) { return Matrix(n, std::vector<double>(n * n, 0.0)); }

PositiveVector::PositiveVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw DimensionError("positive vector must be non-empty");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || !(values_[i] > 0.0)) {
            throw DomainError("entry " + std::to_string(i + 1) +
                              " is not a finite positive number");
        }
    }
}

PositiveVector::PositiveVector(std::initializer_list<double> values)
    : PositiveVector(std::vector<double>(values)) {}

PositiveVector PositiveVector::ones(std::size_t n) {
    return PositiveVector(std::vector<double>(n, 1.0));
}

std::vector<double> matvec(const Matrix& m, std::span<const double> v) {
    const std::size_t n = m.size();
    if (v.size() != n) {
        throw DimensionError("matvec: matrix is " + std::to_string(n) + "x" +
                             std::to_string(n) + " but vector has length " +
                             std::to_string(v.size()));
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = m.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += r[j] * v[j];
        out[i] = s;
    }
    return out;
}

Matrix diag_sandwich(const Matrix& m, const PositiveVector& x) {
    const std::size_t n = m.size();
    if (x.size() != n) {
        throw DimensionError("diag_sandwich: dimension mismatch");
    }
    std::vector<double> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = x[i] * m(i, j) * x[j];
    }
    return Matrix(n, std::move(e));
}

PositiveVector inverse_elementwise(const PositiveVector& v) {
    std::vector<double> out(v.size());
    std::ranges::transform(v.values(), out.begin(), [](double t) { return 1.0 / t; });
    return PositiveVector(std::move(out));
}

double inf_norm(std::span<const double> v) noexcept {
    double r = 0.0;
    for (double t : v) r = std::max(r, std::abs(t));
    return r;
}

double inf_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionError("inf_distance: dimension mismatch");
    }
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

}  // namespace inversepoint
