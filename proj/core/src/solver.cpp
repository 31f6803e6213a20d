#include "inversepoint/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "inversepoint/dense_solve.hpp"
#include "inversepoint/errors.hpp"
#include "inversepoint/fixed_point.hpp"

namespace inversepoint {

namespace {

// A step counts as slow when the tracked gap shrinks by less than this
// factor; kStallWindow slow steps in a row mean the iteration has stalled.
constexpr double kStallRatio = 0.999;
constexpr int kStallWindow = 10;

class StallDetector {
public:
    /// Feeds the next gap; returns true once the iteration has stalled.
    bool update(double gap) {
        if (gap == 0.0) return true;
        if (previous_ > 0.0 && gap / previous_ > kStallRatio) {
            ++slow_;
        } else {
            slow_ = 0;
        }
        previous_ = gap;
        return slow_ >= kStallWindow;
    }

private:
    double previous_ = -1.0;
    int slow_ = 0;
};

void check_config(const SolverConfig& config) {
    if (!(config.tol > 0.0)) throw PreconditionError("tolerance must be positive");
    if (config.max_iter < 1) throw PreconditionError("max_iter must be at least 1");
}

// Nonnegativity and the zero-row test apply to every method.
Classification check_matrix(const Matrix& m, const SolverConfig& config) {
    check_config(config);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m(i, j) < 0.0) throw NonNegativityError(i, j);
        }
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (std::ranges::all_of(m.row(i), [](double v) { return v == 0.0; })) {
            throw ZeroRowError(i);
        }
    }
    return classify(m);
}

SolveResult make_result(PositiveVector x, double res, std::size_t iterations, Method method,
                        const Classification& c) {
    return SolveResult{.x = std::move(x),
                       .residual = res,
                       .iterations = iterations,
                       .method_used = method,
                       .classification = c,
                       .converged = true,
                       .trace = {},
                       .boxes = {}};
}

std::vector<double> midpoint(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> mid(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mid[i] = a[i] + 0.5 * (b[i] - a[i]);
    return mid;
}

SolverConfig with_budget(SolverConfig config, std::size_t used) {
    config.max_iter = used < config.max_iter ? config.max_iter - used : 1;
    return config;
}

// Runs Newton from `start` after another method stalled, folding the
// earlier iterations and trace into the result.
SolveResult escalate_to_newton(const Matrix& m, const std::vector<double>& start,
                               const SolverConfig& config, std::size_t used,
                               std::vector<double> trace, std::vector<BracketState> boxes) {
    auto r = [&] {
        try {
            return solve_newton(m, PositiveVector(start), with_budget(config, used));
        } catch (const ConvergenceError& e) {
            throw ConvergenceError(e.what(), e.best_iterate(), e.residual(),
                                   used + e.iterations(), "newton");
        }
    }();
    r.iterations += used;
    if (config.record_trace) {
        trace.insert(trace.end(), r.trace.begin(), r.trace.end());
        r.trace = std::move(trace);
        r.boxes = std::move(boxes);
    }
    return r;
}

// Picard iteration x <- F(x) shared by the contraction and fixed-point
// paths. Returns on residual <= tol; throws ConvergenceError on stall or
// exhausted budget, with the lowest-residual iterate attached.
SolveResult picard(const Matrix& m, std::vector<double> x, const SolverConfig& config,
                   Method method, const Classification& c) {
    std::vector<double> trace;
    double res = residual(m, x);
    std::vector<double> best = x;
    double best_res = res;
    if (config.record_trace) trace.push_back(res);
    if (res <= config.tol) {
        auto r = make_result(PositiveVector(std::move(x)), res, 0, method, c);
        r.trace = std::move(trace);
        return r;
    }

    StallDetector stall;
    for (std::size_t it = 1; it <= config.max_iter; ++it) {
        auto next = fixed_point_map(m, x).vector();
        const double gap = inf_distance(next, x);
        x = std::move(next);
        res = residual(m, x);
        if (config.record_trace) trace.push_back(res);
        if (res < best_res) {
            best_res = res;
            best = x;
        }
        if (res <= config.tol) {
            auto r = make_result(PositiveVector(std::move(x)), res, it, method, c);
            r.trace = std::move(trace);
            return r;
        }
        if (stall.update(gap)) {
            throw ConvergenceError(std::string(method_name(method)) + " iteration stalled",
                                   std::move(best), best_res, it, std::string(method_name(method)));
        }
    }
    throw ConvergenceError(std::string(method_name(method)) + " iteration budget exhausted",
                           std::move(best), best_res, config.max_iter,
                           std::string(method_name(method)));
}

SolveResult picard_with_fallback(const Matrix& m, std::vector<double> x0,
                                 const SolverConfig& config, Method method,
                                 const Classification& c) {
    try {
        return picard(m, std::move(x0), config, method, c);
    } catch (const ConvergenceError& e) {
        return escalate_to_newton(m, e.best_iterate(), config, e.iterations(), {}, {});
    }
}

}  // namespace

std::string_view method_name(Method m) noexcept {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::bracket: return "bracket";
        case Method::contraction: return "contraction";
        case Method::newton: return "newton";
        case Method::fixed_point: return "fixed_point";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    if (name == "auto") return Method::automatic;
    if (name == "bracket") return Method::bracket;
    if (name == "contraction") return Method::contraction;
    if (name == "newton") return Method::newton;
    if (name == "fixed_point" || name == "fixed-point") return Method::fixed_point;
    return std::nullopt;
}

SolveResult solve_bracket(const Matrix& m, const SolverConfig& config) {
    const Classification c = check_matrix(m, config);
    if (!c.positive_diagonal) {
        throw PreconditionError("bracketing requires a positive diagonal");
    }

    const std::size_t n = m.size();
    std::vector<double> lower(n, 0.0);
    std::vector<double> upper = fixed_point_map(m, lower).vector();

    std::vector<double> trace;
    std::vector<BracketState> boxes;
    if (config.record_trace) boxes.push_back({lower, upper});

    StallDetector stall;
    std::vector<double> mid;
    for (std::size_t it = 1; it <= config.max_iter; ++it) {
        lower = fixed_point_map(m, upper).vector();
        upper = fixed_point_map(m, lower).vector();
        if (config.record_trace) boxes.push_back({lower, upper});

        mid = midpoint(lower, upper);
        const double res = residual(m, mid);
        if (config.record_trace) trace.push_back(res);
        if (res <= config.tol) {
            auto r = make_result(PositiveVector(std::move(mid)), res, it, Method::bracket, c);
            r.trace = std::move(trace);
            r.boxes = std::move(boxes);
            return r;
        }
        if (stall.update(inf_distance(upper, lower))) {
            return escalate_to_newton(m, mid, config, it, std::move(trace), std::move(boxes));
        }
    }
    throw ConvergenceError("bracketing budget exhausted", std::move(mid), residual(m, mid),
                           config.max_iter, "bracket");
}

SolveResult solve_contraction(const Matrix& m, const SolverConfig& config) {
    const Classification c = check_matrix(m, config);
    if (!c.contraction_condition) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (!(2.0 * m(i, i) > m(i, j))) throw ContractionPreconditionError(i, j);
            }
        }
        throw ContractionPreconditionError(0, 0);
    }
    const std::vector<double> zero(m.size(), 0.0);
    return picard(m, fixed_point_map(m, zero).vector(), config, Method::contraction, c);
}

SolveResult solve_fixed_point(const Matrix& m, const SolverConfig& config) {
    const Classification c = check_matrix(m, config);
    return picard_with_fallback(m, std::vector<double>(m.size(), 1.0), config,
                                Method::fixed_point, c);
}

SolveResult solve_newton(const Matrix& m, const PositiveVector& x0, const SolverConfig& config) {
    const Classification c = check_matrix(m, config);
    const std::size_t n = m.size();
    if (x0.size() != n) throw DimensionError("solve_newton: start has wrong dimension");

    std::vector<double> x = x0.vector();
    std::vector<double> trace;

    auto defect = [&](const std::vector<double>& v, std::vector<double>& mv) {
        mv = matvec(m, v);
        std::vector<double> g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = v[i] * mv[i] - 1.0;
        return g;
    };

    std::vector<double> mx;
    std::vector<double> g = defect(x, mx);
    double res = inf_norm(g);
    if (config.record_trace) trace.push_back(res);

    for (std::size_t it = 0;; ++it) {
        if (res <= config.tol) {
            auto r = make_result(PositiveVector(std::move(x)), res, it, Method::newton, c);
            r.trace = std::move(trace);
            return r;
        }
        if (it == config.max_iter) break;

        // J_ij = x_i m_ij + delta_ij (M x)_i
        std::vector<double> jac(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) jac[i * n + j] = x[i] * m(i, j);
            jac[i * n + i] += mx[i];
        }
        std::vector<double> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = -g[i];
        const auto step = solve_dense(std::move(jac), rhs);

        double alpha = 1.0;
        bool accepted = false;
        std::vector<double> trial(n);
        for (std::size_t h = 0; h <= config.newton_damping_max_halvings; ++h, alpha *= 0.5) {
            bool positive = true;
            for (std::size_t i = 0; i < n; ++i) {
                trial[i] = x[i] + alpha * step[i];
                if (!(trial[i] > 0.0) || !std::isfinite(trial[i])) positive = false;
            }
            if (!positive) continue;
            std::vector<double> trial_mx;
            auto trial_g = defect(trial, trial_mx);
            const double trial_res = inf_norm(trial_g);
            if (trial_res < res) {
                x = trial;
                mx = std::move(trial_mx);
                g = std::move(trial_g);
                res = trial_res;
                accepted = true;
                break;
            }
        }
        if (config.record_trace) trace.push_back(res);
        if (!accepted) {
            throw ConvergenceError("newton line search failed to reduce the residual",
                                   std::move(x), res, it + 1, "newton");
        }
    }
    throw ConvergenceError("newton budget exhausted", std::move(x), res, config.max_iter,
                           "newton");
}

SolveResult solve_auto(const Matrix& m, const SolverConfig& config) {
    const Classification c = check_matrix(m, config);
    if (c.contraction_condition) {
        try {
            return solve_contraction(m, config);
        } catch (const ConvergenceError& e) {
            return escalate_to_newton(m, e.best_iterate(), config, e.iterations(), {}, {});
        }
    }
    if (c.positive_diagonal) return solve_bracket(m, config);
    return solve_fixed_point(m, config);
}

SolveResult solve(const Matrix& m, const SolverConfig& config) {
    switch (config.method) {
        case Method::automatic: return solve_auto(m, config);
        case Method::bracket: return solve_bracket(m, config);
        case Method::contraction: return solve_contraction(m, config);
        case Method::fixed_point: return solve_fixed_point(m, config);
        case Method::newton: {
            check_matrix(m, config);
            if (has_positive_diagonal(m)) {
                const std::vector<double> zero(m.size(), 0.0);
                return solve_newton(m, fixed_point_map(m, zero), config);
            }
            return solve_newton(m, PositiveVector::ones(m.size()), config);
        }
    }
    throw PreconditionError("unknown method");
}

UniquenessReport multistart_uniqueness(const Matrix& m, const SolverConfig& config,
                                       std::size_t starts) {
    if (starts == 0) throw PreconditionError("multistart needs at least one start");
    check_matrix(m, config);

    std::mt19937_64 rng(config.seed.value_or(kDefaultSeed));
    std::uniform_real_distribution<double> log_scale(std::log(1e-2), std::log(1e2));

    std::vector<PositiveVector> start_points;
    start_points.reserve(starts);
    for (std::size_t s = 0; s < starts; ++s) {
        std::vector<double> p(m.size());
        for (double& v : p) v = std::exp(log_scale(rng));
        start_points.emplace_back(std::move(p));
    }

    std::vector<SolveResult> results;
    results.reserve(starts);
    for (const auto& p : start_points) results.push_back(solve_newton(m, p, config));

    UniquenessReport report{.first = results.front(), .max_distance = 0.0, .solutions = {}};
    for (std::size_t a = 0; a < results.size(); ++a) {
        for (std::size_t b = a + 1; b < results.size(); ++b) {
            report.max_distance = std::max(
                report.max_distance, inf_distance(results[a].x.values(), results[b].x.values()));
        }
    }
    for (auto& r : results) report.solutions.push_back(std::move(r.x));
    return report;
}

}  // namespace inversepoint
