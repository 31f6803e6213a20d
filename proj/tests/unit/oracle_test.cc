#include "inversepoint/oracle.hpp"

#include <gtest/gtest.h>

#include "inversepoint/errors.hpp"
#include "inversepoint/fixed_point.hpp"
#include "inversepoint/solver.hpp"
#include "random_matrices.hpp"

namespace inversepoint::oracle {
namespace {

TEST(OracleTest, Identity) {
    const auto x = oracle_solve(Matrix::identity(4), 1e-14);
    for (double v : x.values()) EXPECT_NEAR(v, 1.0, 1e-14);
}

TEST(OracleTest, SmallSystemsMatchHighPrecisionReference) {
    const auto left = oracle_solve(Matrix{{1, 3}, {5, 2}}, 1e-14);
    EXPECT_NEAR(left[0], 0.69038185769831154, 1e-12);
    EXPECT_NEAR(left[1], 0.25269729822947534, 1e-12);

    const auto right = oracle_solve(Matrix{{1, 2, 2}, {1, 1, 1}, {1, 3, 1}}, 1e-14);
    EXPECT_NEAR(right[0], 0.40141559273679638, 1e-12);
    EXPECT_NEAR(right[1], 0.69141964227318436, 1e-12);
    EXPECT_NEAR(right[2], 0.35346443433741328, 1e-12);
}

TEST(OracleTest, Preconditions) {
    EXPECT_THROW(oracle_solve(Matrix::identity(6), 1e-12), PreconditionError);
    EXPECT_THROW(oracle_solve(Matrix{{1, 0}, {0, 0}}, 1e-12), ZeroRowError);
    EXPECT_THROW(oracle_solve(Matrix{{1, -1}, {0, 1}}, 1e-12), NonNegativityError);
}

TEST(OracleTest, SweepBudgetExhaustionThrows) {
    // Weak diagonal: each sweep only shrinks the error by ~1e-4 relative.
    EXPECT_THROW(oracle_solve(Matrix{{1e-4, 1}, {1, 1e-4}}, 1e-12, 3), OracleDivergenceError);
}

TEST(OracleTest, OutputCertifies) {
    testing::Rng rng(113);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix m = testing::shifted_diagonal_matrix(rng, testing::uniform_size(rng, 1, 5));
        const double tol = 1e-13;
        const auto x = oracle_solve(m, tol);
        EXPECT_LE(residual(m, x), tol * 1.0001);
    }
}

}  // namespace
}  // namespace inversepoint::oracle
