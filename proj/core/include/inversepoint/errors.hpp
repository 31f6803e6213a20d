#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace inversepoint {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A matrix or vector entry violated a construction-time invariant
/// (NaN, infinity, non-positive entry of a PositiveVector).
class DomainError : public Error {
public:
    using Error::Error;
};

class NonNegativityError : public Error {
public:
    NonNegativityError(std::size_t row, std::size_t col)
        : Error("negative entry at (" + std::to_string(row + 1) + ", " +
                std::to_string(col + 1) + ")"),
          row_(row), col_(col) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

/// Row `row` (0-based) gives the equation x_i * 0 = 1: either the whole row
/// is zero, or the diagonal is zero and the off-diagonal weight vanishes at
/// the evaluation point.
class ZeroRowError : public Error {
public:
    explicit ZeroRowError(std::size_t row)
        : Error("row " + std::to_string(row + 1) +
                " has no positive weight: x_i * 0 = 1 is unsatisfiable"),
          row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// A solver was asked to run on input outside its hypotheses.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotPrimitiveError : public Error {
public:
    NotPrimitiveError() : Error("matrix is not primitive") {}
};

class ContractionPreconditionError : public PreconditionError {
public:
    ContractionPreconditionError(std::size_t row, std::size_t col)
        : PreconditionError("contraction condition 2*m_ii > m_ij fails at (" +
                            std::to_string(row + 1) + ", " + std::to_string(col + 1) + ")"),
          row_(row), col_(col) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

class SingularJacobianError : public Error {
public:
    using Error::Error;
};

/// An iterative method ran out of budget. Carries the best iterate seen so
/// callers can still report it.
class ConvergenceError : public Error {
public:
    ConvergenceError(std::string what, std::vector<double> best, double residual,
                     std::size_t iterations, std::string method)
        : Error(std::move(what)),
          best_(std::move(best)),
          residual_(residual),
          iterations_(iterations),
          method_(std::move(method)) {}

    const std::vector<double>& best_iterate() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }
    std::size_t iterations() const noexcept { return iterations_; }
    const std::string& method() const noexcept { return method_; }

private:
    std::vector<double> best_;
    double residual_;
    std::size_t iterations_;
    std::string method_;
};

/// Raised by the oracle when coordinate sweeps fail to reach the tolerance.
class OracleDivergenceError : public Error {
public:
    OracleDivergenceError(double residual, std::size_t sweeps)
        : Error("oracle sweep did not reach tolerance (residual " +
                std::to_string(residual) + " after " + std::to_string(sweeps) +
                " sweeps)"),
          residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Malformed text input. Line and column are 1-based; column 0 means the
/// position within the line is unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) +
                (column ? ", column " + std::to_string(column) : std::string{}) +
                ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed input whose values violate matrix requirements
/// (negative, NaN, ragged).
class ValidationError : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace inversepoint
