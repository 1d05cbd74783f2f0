#pragma once

#include <vector>

namespace icv::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Options {
    double pivot_tol = 1e-10;
    int max_pivots = 10000;
    // Phase-1 optimum above this (caller-scaled) value means infeasible.
    double feas_tol = 1e-9;
};

struct Solution {
    Status status = Status::Optimal;
    double objective = 0.0;          // phase-2 objective, or phase-1 residual on Infeasible
    std::vector<double> x;           // primal solution (empty unless Optimal)
    double phase1_residual = 0.0;    // min sum of artificials
    int pivots = 0;
};

// Dense matrix, row major: rows[i][j].
using Matrix = std::vector<std::vector<double>>;

// min c'x  s.t.  A x = b, x >= 0.
// Two-phase tableau simplex with Bland's anti-cycling rule.
Solution solve_standard(const Matrix& A, const std::vector<double>& b,
                        const std::vector<double>& c, const Options& opt = {});

// Feasibility of { A x = b, x >= 0 }: returns the phase-1 optimum
// (an L1-type residual; ~0 iff feasible) and a feasible point when found.
Solution phase1(const Matrix& A, const std::vector<double>& b, const Options& opt = {});

}  // namespace icv::lp
