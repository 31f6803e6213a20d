#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "inversepoint/classify.hpp"
#include "inversepoint/matrix.hpp"

namespace inversepoint {

enum class Method { automatic, bracket, contraction, newton, fixed_point };

/// "auto", "bracket", "contraction", "newton", "fixed_point".
std::string_view method_name(Method m) noexcept;

/// Inverse of method_name; also accepts "fixed-point".
std::optional<Method> parse_method(std::string_view name) noexcept;

struct SolverConfig {
    double tol = 1e-12;
    std::size_t max_iter = 10000;
    Method method = Method::automatic;
    std::size_t newton_damping_max_halvings = 40;
    std::optional<std::uint64_t> seed;
    /// Keep the per-iteration residuals and, for bracketing, every box.
    bool record_trace = false;
};

/// One nested box [lower, upper] of the bracketing iteration.
struct BracketState {
    std::vector<double> lower;
    std::vector<double> upper;
};

struct SolveResult {
    PositiveVector x;
    double residual = 0.0;
    std::size_t iterations = 0;
    Method method_used = Method::automatic;
    Classification classification;
    bool converged = false;
    std::vector<double> trace;
    std::vector<BracketState> boxes;
};

/// Dispatches on `config.method`.
///
/// Throws NonNegativityError, ZeroRowError, PreconditionError (method not
/// applicable), ConvergenceError (budget exhausted or stalled; carries the
/// best iterate) and SingularJacobianError.
SolveResult solve(const Matrix& m, const SolverConfig& config = {});

/// Nested boxes lower <- F(upper), upper <- F(lower) starting from
/// [0, F(0)]. Requires a positive diagonal.
///
/// The answer is the box midpoint. When the box width stops shrinking
/// (ratio above 0.999 for 10 consecutive steps, or exactly zero) before the
/// residual reaches tol, damped Newton finishes from the midpoint and the
/// result reports Method::newton.
SolveResult solve_bracket(const Matrix& m, const SolverConfig& config = {});

/// Picard iteration x <- F(x) from F(0) when 2 m_ii > m_ij for all i, j.
/// Throws ContractionPreconditionError otherwise.
SolveResult solve_contraction(const Matrix& m, const SolverConfig& config = {});

/// Damped Newton on G_i(x) = x_i (M x)_i - 1 from `x0`.
SolveResult solve_newton(const Matrix& m, const PositiveVector& x0,
                         const SolverConfig& config = {});

/// Picard iteration from the all-ones vector with Newton fallback on stall.
/// The only path that accepts zero diagonal entries besides Newton.
SolveResult solve_fixed_point(const Matrix& m, const SolverConfig& config = {});

/// contraction if the contraction condition holds, else bracketing if the
/// diagonal is positive, else fixed-point iteration; every path escalates
/// to Newton from its best iterate on a stall.
SolveResult solve_auto(const Matrix& m, const SolverConfig& config = {});

struct UniquenessReport {
    SolveResult first;
    /// Largest infinity-norm distance between any two solutions.
    double max_distance = 0.0;
    std::vector<PositiveVector> solutions;
};

/// Runs solve_newton from `starts` random points with components
/// log-uniform in [1e-2, 1e2], seeded by config.seed (or a fixed default).
/// Any failing start propagates its error.
UniquenessReport multistart_uniqueness(const Matrix& m, const SolverConfig& config,
                                       std::size_t starts);

/// Default seed used when SolverConfig::seed is empty.
inline constexpr std::uint64_t kDefaultSeed = 20170412;

}  // namespace inversepoint
