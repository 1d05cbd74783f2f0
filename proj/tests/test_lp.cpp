#include <doctest.h>

#include "icv/lp.hpp"

using namespace icv;

TEST_CASE("standard form: unique vertex optimum") {
    // min x0 + x1  s.t.  x0 + 2 x1 = 4, x >= 0.  Optimum at (0, 2).
    lp::Solution s = lp::solve_standard({{1, 2}}, {4}, {1, 1});
    REQUIRE(s.status == lp::Status::Optimal);
    CHECK(s.objective == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.x[0] == doctest::Approx(0.0));
    CHECK(s.x[1] == doctest::Approx(2.0));
}

TEST_CASE("infeasible system reports a positive residual") {
    // x0 = 1 and x0 = 3 cannot both hold.
    lp::Solution s = lp::phase1({{1}, {1}}, {1, 3});
    CHECK(s.status == lp::Status::Infeasible);
    CHECK(s.phase1_residual > 0.5);
}

TEST_CASE("negative rhs rows are normalized") {
    // -x0 = -2  =>  x0 = 2.
    lp::Solution s = lp::phase1({{-1}}, {-2});
    REQUIRE(s.status == lp::Status::Optimal);
    CHECK(s.x[0] == doctest::Approx(2.0));
}

TEST_CASE("redundant rows are dropped before phase 2") {
    // Duplicate constraint; still solvable.
    lp::Solution s = lp::solve_standard({{1, 1}, {1, 1}}, {2, 2}, {1, 2});
    REQUIRE(s.status == lp::Status::Optimal);
    CHECK(s.objective == doctest::Approx(2.0));
    CHECK(s.x[0] == doctest::Approx(2.0));
}

TEST_CASE("unbounded detection") {
    // min -x0 s.t. x0 - x1 = 0: drive both to infinity.
    lp::Solution s = lp::solve_standard({{1, -1}}, {0}, {-1, 0});
    CHECK(s.status == lp::Status::Unbounded);
}

TEST_CASE("degenerate problem terminates under Bland's rule") {
    // Third row is the sum of the first two; the slack columns let the
    // objective reach zero.
    lp::Matrix A = {{1, 1, 1, 0}, {1, 1, 0, 1}, {2, 2, 1, 1}};
    lp::Solution s = lp::solve_standard(A, {1, 1, 2}, {1, 1, 0, 0});
    REQUIRE(s.status == lp::Status::Optimal);
    CHECK(s.objective == doctest::Approx(0.0));
    CHECK(s.pivots < 10000);
}

TEST_CASE("phase-1 residual approximates constraint violation") {
    // x0 + x1 = 1, x0 - x1 = 3 forces x1 = -1 < 0; residual is the L1 gap.
    lp::Solution s = lp::phase1({{1, 1}, {1, -1}}, {1, 3});
    CHECK(s.status == lp::Status::Infeasible);
    CHECK(s.phase1_residual == doctest::Approx(2.0).epsilon(1e-9));
}
