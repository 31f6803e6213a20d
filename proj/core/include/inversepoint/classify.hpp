#pragma once

#include <cstddef>
#include <optional>

#include "inversepoint/matrix.hpp"

namespace inversepoint {

/// Which existence/uniqueness hypotheses a matrix satisfies.
struct Classification {
    bool nonnegative = false;
    bool positive_diagonal = false;
    bool primitive = false;
    /// 2 m_ii > m_ij for every i, j.
    bool contraction_condition = false;
    /// max_{i,j} m_ij / (2 m_ii), present exactly when the condition holds.
    std::optional<double> contraction_constant;
    bool has_zero_row = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

struct ContractionCheck {
    bool holds = false;
    std::optional<double> constant;
};

struct PerronResult {
    PositiveVector vector;  // normalized to unit infinity norm
    double eigenvalue;
    std::size_t iterations;
};

bool is_nonnegative(const Matrix& m) noexcept;

/// True iff some power M^k with k <= (n-1)^2 + 1 is entrywise positive.
/// Works on the zero/nonzero pattern only. A 1x1 matrix [[a]] is primitive
/// iff a > 0.
bool is_primitive(const Matrix& m);

bool has_positive_diagonal(const Matrix& m) noexcept;

bool has_zero_row(const Matrix& m) noexcept;

/// The constant is taken over all pairs including j == i, so it is at least
/// 1/2 whenever the condition holds.
ContractionCheck contraction_condition(const Matrix& m) noexcept;

/// Power iteration from the all-ones vector, normalized in the infinity
/// norm after every product.
///
/// Stops once ||M v - lambda v||_inf <= tol ||v||_inf. Throws
/// NotPrimitiveError for non-primitive input and ConvergenceError (carrying
/// the last iterate) when `max_iter` products do not reach `tol`.
PerronResult perron_vector(const Matrix& m, double tol = 1e-12,
                           std::size_t max_iter = 1'000'000);

Classification classify(const Matrix& m);

}  // namespace inversepoint
