#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace inversepoint {

/// Dense square matrix of finite doubles, row-major.
///
/// Entries may be negative; nonnegativity is a property checked by
/// `classify` and enforced by the solver, not by the type.
class Matrix {
public:
    /// Builds an n x n matrix from n*n row-major values.
    /// Throws DimensionError when n == 0 or the size is wrong, DomainError on
    /// NaN or infinity.
    Matrix(std::size_t n, std::vector<double> entries);

    /// Builds from nested rows, e.g. `Matrix{{1, 0}, {1, 1}}`.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const noexcept {
        return entries_[i * n_ + j];
    }

    std::span<const double> row(std::size_t i) const noexcept {
        return {entries_.data() + i * n_, n_};
    }

    std::span<const double> entries() const noexcept { return entries_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_;
    std::vector<double> entries_;
};

/// Vector whose entries are all finite and strictly positive.
class PositiveVector {
public:
    /// Throws DomainError if any entry is not finite or not > 0, and
    /// DimensionError if `values` is empty.
    explicit PositiveVector(std::vector<double> values);
    PositiveVector(std::initializer_list<double> values);

    static PositiveVector ones(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    const std::vector<double>& vector() const noexcept { return values_; }

    friend bool operator==(const PositiveVector&, const PositiveVector&) = default;

private:
    std::vector<double> values_;
};

/// Returns M v. Throws DimensionError when sizes differ.
std::vector<double> matvec(const Matrix& m, std::span<const double> v);
inline std::vector<double> matvec(const Matrix& m, const PositiveVector& v) {
    return matvec(m, v.values());
}

/// diag(x) M diag(x), i.e. entry (i, j) is x_i m_ij x_j.
Matrix diag_sandwich(const Matrix& m, const PositiveVector& x);

/// (1/v_1, ..., 1/v_n).
PositiveVector inverse_elementwise(const PositiveVector& v);

double inf_norm(std::span<const double> v) noexcept;

/// max_i |a_i - b_i|. Throws DimensionError when sizes differ.
double inf_distance(std::span<const double> a, std::span<const double> b);

}  // namespace inversepoint
