#include "inversepoint/solver.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "inversepoint/errors.hpp"
#include "inversepoint/fixed_point.hpp"
#include "inversepoint/oracle.hpp"
#include "inversepoint/stochastic.hpp"
#include "random_matrices.hpp"

namespace inversepoint {
namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);

const Matrix kTriangular{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
const Matrix kZeroDiagonal{{0, 0, 1}, {1, 0, 0}, {0, 1, 1}};
const Matrix kCounterexample{{1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
const std::vector<double> kTriangularSolution{1.0, (kSqrt5 - 1) / 2,
                                              (std::sqrt(2 * kSqrt5 + 22) - kSqrt5 - 1) / 4};

void expect_near(std::span<const double> got, std::span<const double> want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "i=" << i;
}

// The checks every converged result must pass.
void expect_certified(const Matrix& m, const SolveResult& r, double tol) {
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.residual, tol);
    EXPECT_LE(residual(m, r.x), tol);
    const double scale = std::max(1.0, inf_norm(r.x.values()));
    EXPECT_LE(inf_distance(fixed_point_map(m, r.x).values(), r.x.values()), 10 * tol * scale);
    for (double s : certify(m, r.x).row_sums) {
        EXPECT_NEAR(s, 1.0, tol * static_cast<double>(m.size()));
    }
}

void expect_nested(const std::vector<BracketState>& boxes) {
    ASSERT_FALSE(boxes.empty());
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        const auto& b = boxes[k];
        for (std::size_t i = 0; i < b.lower.size(); ++i) {
            EXPECT_LE(b.lower[i], b.upper[i]);
            if (k > 0) {
                EXPECT_LE(boxes[k - 1].lower[i], b.lower[i]);
                EXPECT_LE(b.upper[i], boxes[k - 1].upper[i]);
            }
        }
    }
}

TEST(SolveTest, Identity) {
    const auto r = solve(Matrix::identity(4));
    EXPECT_EQ(r.x, PositiveVector::ones(4));
    EXPECT_EQ(r.residual, 0.0);
    EXPECT_TRUE(r.converged);
}

TEST(SolveTest, TriangularExample) {
    const auto r = solve(kTriangular);
    expect_near(r.x.values(), kTriangularSolution, 1e-10);
    EXPECT_NEAR(r.x[2], 0.4772599964740196, 1e-10);
    expect_certified(kTriangular, r, 1e-12);
}

TEST(SolveTest, ZeroDiagonalExample) {
    const auto r = solve(kZeroDiagonal);
    expect_near(r.x.values(), std::vector<double>{kSqrt2, 1 / kSqrt2, 1 / kSqrt2}, 1e-10);
    expect_certified(kZeroDiagonal, r, 1e-12);
}

TEST(SolveTest, PairSystem) {
    const Matrix m{{1, 3}, {5, 2}};
    const auto r = solve(m);
    expect_certified(m, r, 1e-12);
    // mpmath reference, 30 digits.
    expect_near(r.x.values(), std::vector<double>{0.69038185769831154, 0.25269729822947534}, 1e-12);
    for (double v : r.x.values()) {
        EXPECT_GT(v, 0.0);
        EXPECT_LT(v, 1.0);
    }
}

TEST(SolveTest, RejectsBadInput) {
    EXPECT_THROW(solve(Matrix{{1, -1}, {0, 1}}), NonNegativityError);
    try {
        solve(Matrix{{1, 2, 0}, {0, 0, 0}, {1, 1, 1}});
        FAIL();
    } catch (const ZeroRowError& e) {
        EXPECT_EQ(e.row(), 1u);
    }
    SolverConfig bad;
    bad.tol = 0.0;
    EXPECT_THROW(solve(Matrix::identity(2), bad), PreconditionError);
}

TEST(BracketTest, IdentityTakesOneStep) {
    SolverConfig config;
    config.record_trace = true;
    const auto r = solve_bracket(Matrix::identity(3), config);
    EXPECT_EQ(r.iterations, 1u);
    EXPECT_EQ(r.method_used, Method::bracket);
    EXPECT_EQ(r.x, PositiveVector::ones(3));
    expect_nested(r.boxes);
}

TEST(BracketTest, TriangularGapCloses) {
    SolverConfig config;
    config.record_trace = true;
    const auto r = solve_bracket(kTriangular, config);
    EXPECT_EQ(r.method_used, Method::bracket);
    expect_near(r.x.values(), kTriangularSolution, 1e-12);
    expect_nested(r.boxes);
    const auto& last = r.boxes.back();
    EXPECT_LE(inf_distance(last.upper, last.lower), 1e-12);
    for (std::size_t k = 0; k < r.boxes.size(); ++k) {
        const auto& b = r.boxes[k];
        const auto f_upper = fixed_point_map(kTriangular, b.upper);
        const auto f_lower = fixed_point_map(kTriangular, b.lower);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_GE(f_upper[i], b.lower[i]);
            EXPECT_LE(f_lower[i], b.upper[i]);
        }
    }
}

TEST(BracketTest, CounterexampleConvergesWithoutStalling) {
    // The symmetric fixed point has |f'| = 2m/(2m+1) = 2/3, so the boxes
    // shrink by 4/9 per step.
    SolverConfig config;
    config.record_trace = true;
    const auto r = solve_bracket(kCounterexample, config);
    EXPECT_EQ(r.method_used, Method::bracket);
    expect_near(r.x.values(), std::vector<double>(3, 1 / kSqrt5), 1e-12);
    expect_nested(r.boxes);
}

TEST(BracketTest, SlowBoxesFallBackToNewton) {
    const Matrix m{{1e-4, 1}, {1, 1e-4}};
    SolverConfig config;
    config.record_trace = true;
    const auto r = solve_bracket(m, config);
    EXPECT_EQ(r.method_used, Method::newton);
    expect_certified(m, r, config.tol);
    expect_nested(r.boxes);
    // Pure bracketing would need on the order of 1e5 steps here.
    EXPECT_LT(r.iterations, 1000u);
    // x1 = x2 = t with t^2 (1 + 1e-4) = 1.
    expect_near(r.x.values(), std::vector<double>(2, 1 / std::sqrt(1 + 1e-4)), 1e-12);
}

TEST(BracketTest, RequiresPositiveDiagonal) {
    EXPECT_THROW(solve_bracket(kZeroDiagonal), PreconditionError);
}

TEST(BracketTest, NestingOnRandomMatrices) {
    testing::Rng rng(101);
    SolverConfig config;
    config.record_trace = true;
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix m = testing::shifted_diagonal_matrix(rng, testing::uniform_size(rng, 1, 5));
        const auto r = solve_bracket(m, config);
        expect_nested(r.boxes);
        expect_certified(m, r, config.tol);
    }
}

TEST(ContractionTest, Identity) {
    const auto r = solve_contraction(Matrix::identity(3));
    EXPECT_LE(r.iterations, 2u);
    EXPECT_EQ(r.x, PositiveVector::ones(3));
}

TEST(ContractionTest, TriangularWithinGeometricBound) {
    SolverConfig config;
    const auto r = solve_contraction(kTriangular, config);
    EXPECT_EQ(r.method_used, Method::contraction);
    expect_near(r.x.values(), kTriangularSolution, 1e-12);
    const auto bound =
        static_cast<std::size_t>(std::ceil(std::log(config.tol) / std::log(0.5))) + 2;
    EXPECT_LE(r.iterations, bound);
}

TEST(ContractionTest, RejectsCounterexample) {
    try {
        solve_contraction(kCounterexample);
        FAIL();
    } catch (const ContractionPreconditionError& e) {
        EXPECT_EQ(e.row(), 0u);
        EXPECT_EQ(e.col(), 1u);
    }
}

TEST(ContractionTest, SuccessiveGapsDecayByConstant) {
    testing::Rng rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = testing::uniform_size(rng, 2, 5);
        const Matrix m = testing::contraction_matrix(rng, n);
        const double c = *contraction_condition(m).constant;
        std::vector<double> x = fixed_point_map(m, std::vector<double>(n, 0.0)).vector();
        double previous = -1.0;
        for (int k = 0; k < 30; ++k) {
            auto next = fixed_point_map(m, x).vector();
            const double gap = inf_distance(next, x);
            if (previous > 1e-13 && gap > 1e-13) EXPECT_LE(gap, (c + 1e-9) * previous);
            previous = gap;
            x = std::move(next);
        }
        const auto r = solve_contraction(m);
        expect_certified(m, r, 1e-12);
    }
}

TEST(NewtonTest, IdentityQuadratic) {
    const auto r = solve_newton(Matrix::identity(2), PositiveVector{2, 2});
    EXPECT_LE(r.iterations, 6u);
    expect_near(r.x.values(), std::vector<double>{1, 1}, 1e-14);
}

TEST(NewtonTest, ZeroDiagonalFromOnes) {
    const auto r = solve_newton(kZeroDiagonal, PositiveVector::ones(3));
    expect_near(r.x.values(), std::vector<double>{kSqrt2, 1 / kSqrt2, 1 / kSqrt2}, 1e-10);
}

TEST(NewtonTest, CounterexampleFromFOfZero) {
    const auto x0 = fixed_point_map(kCounterexample, std::vector<double>{0, 0, 0});
    EXPECT_EQ(x0, PositiveVector::ones(3));
    const auto r = solve_newton(kCounterexample, x0);
    expect_near(r.x.values(), std::vector<double>(3, 1 / kSqrt5), 1e-12);
}

TEST(NewtonTest, SingularJacobian) {
    // For [[0,1],[1,0]] the Jacobian is [[x2, x1], [x2, x1]].
    EXPECT_THROW(solve_newton(Matrix{{0, 1}, {1, 0}}, PositiveVector{2, 2}), SingularJacobianError);
}

TEST(NewtonTest, BudgetExhaustionCarriesBestIterate) {
    SolverConfig config;
    config.max_iter = 1;
    try {
        solve_newton(kTriangular, PositiveVector{50, 50, 50}, config);
        FAIL();
    } catch (const ConvergenceError& e) {
        EXPECT_EQ(e.best_iterate().size(), 3u);
        EXPECT_GT(e.residual(), config.tol);
        EXPECT_EQ(e.method(), "newton");
    }
}

TEST(AutoTest, StrategySelection) {
    EXPECT_EQ(solve_auto(kTriangular).method_used, Method::contraction);

    const auto zd = solve_auto(kZeroDiagonal);
    EXPECT_TRUE(zd.method_used == Method::fixed_point || zd.method_used == Method::newton);
    EXPECT_TRUE(zd.converged);

    const auto ce = solve_auto(kCounterexample);
    EXPECT_TRUE(ce.method_used == Method::bracket || ce.method_used == Method::newton);
    expect_near(ce.x.values(), std::vector<double>(3, 1 / kSqrt5), 1e-10);
}

TEST(AutoTest, MatchesOracleOnRandomMatrices) {
    testing::Rng rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = testing::uniform_size(rng, 2, 5);
        const Matrix m = testing::shifted_diagonal_matrix(rng, n);
        const auto r = solve(m);
        expect_certified(m, r, 1e-12);
        const auto ref = oracle::oracle_solve(m, 1e-13);
        EXPECT_LE(inf_distance(r.x.values(), ref.values()), 1e-8);
    }
}

TEST(MethodNameTest, RoundTrips) {
    for (auto m : {Method::automatic, Method::bracket, Method::contraction, Method::newton,
                   Method::fixed_point}) {
        EXPECT_EQ(parse_method(method_name(m)), m);
    }
    EXPECT_EQ(parse_method("fixed-point"), Method::fixed_point);
    EXPECT_FALSE(parse_method("sinkhorn").has_value());
}

TEST(MultistartTest, Examples) {
    SolverConfig config;
    config.seed = 1;
    EXPECT_LE(multistart_uniqueness(Matrix::identity(3), config, 20).max_distance, 1e-10);
    EXPECT_LE(multistart_uniqueness(kZeroDiagonal, config, 20).max_distance, 1e-8);
    const auto tri = multistart_uniqueness(kTriangular, config, 20);
    EXPECT_LE(tri.max_distance, 1e-8);
    EXPECT_EQ(tri.solutions.size(), 20u);
    expect_near(tri.first.x.values(), kTriangularSolution, 1e-10);
}

TEST(MultistartTest, DeterministicForSeed) {
    SolverConfig config;
    config.seed = 99;
    const Matrix m{{1, 3}, {5, 2}};
    const auto a = multistart_uniqueness(m, config, 5);
    const auto b = multistart_uniqueness(m, config, 5);
    EXPECT_EQ(a.max_distance, b.max_distance);
    EXPECT_EQ(a.solutions, b.solutions);
}

}  // namespace
}  // namespace inversepoint
