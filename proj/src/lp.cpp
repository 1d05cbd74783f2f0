#include "icv/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "icv/errors.hpp"

namespace icv::lp {

namespace {

// Tableau layout: m constraint rows of width (ncols+1), last column = rhs,
// plus one cost row holding reduced costs and, in its rhs cell, -objective.
struct Tableau {
    std::size_t m = 0, ncols = 0;
    std::vector<double> t;      // (m+1) x (ncols+1)
    std::vector<int> basis;     // basis[i] = column index basic in row i

    double& at(std::size_t i, std::size_t j) { return t[i * (ncols + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return t[i * (ncols + 1) + j]; }
    double& rhs(std::size_t i) { return at(i, ncols); }
    double& cost(std::size_t j) { return at(m, j); }
    double objective() const { return -at(m, ncols); }

    void pivot(std::size_t pr, std::size_t pc) {
        const double piv = at(pr, pc);
        const double inv = 1.0 / piv;
        for (std::size_t j = 0; j <= ncols; ++j) at(pr, j) *= inv;
        at(pr, pc) = 1.0;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == pr) continue;
            const double f = at(i, pc);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= ncols; ++j) at(i, j) -= f * at(pr, j);
            at(i, pc) = 0.0;
        }
        if (pr < m) basis[pr] = static_cast<int>(pc);
    }
};

// Bland's rule: entering = lowest-index column with reduced cost < -tol;
// leaving = min ratio, ties broken by smallest basis variable index.
Status run_simplex(Tableau& tb, std::size_t active_cols, const Options& opt, int& pivots) {
    for (;;) {
        std::size_t enter = active_cols;
        for (std::size_t j = 0; j < active_cols; ++j) {
            if (tb.cost(j) < -opt.pivot_tol) {
                enter = j;
                break;
            }
        }
        if (enter == active_cols) return Status::Optimal;

        std::size_t leave = tb.m;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < tb.m; ++i) {
            const double a = tb.at(i, enter);
            if (a <= opt.pivot_tol) continue;
            const double ratio = std::max(tb.rhs(i), 0.0) / a;
            if (leave == tb.m || ratio < best_ratio - 0.0 ||
                (ratio == best_ratio && tb.basis[i] < tb.basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == tb.m) return Status::Unbounded;

        tb.pivot(leave, enter);
        if (++pivots > opt.max_pivots) return Status::IterationLimit;
    }
}

struct Phase1Result {
    Tableau tb;
    Status status = Status::Optimal;
    double residual = 0.0;
    int pivots = 0;
    std::size_t nvars = 0;
};

Phase1Result build_and_run_phase1(const Matrix& A, const std::vector<double>& b,
                                  const Options& opt) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    for (const auto& row : A)
        if (row.size() != n) throw InputError("lp: ragged constraint matrix");
    if (b.size() != m) throw InputError("lp: rhs size mismatch");

    Phase1Result r;
    r.nvars = n;
    Tableau& tb = r.tb;
    tb.m = m;
    tb.ncols = n + m;  // structural variables then artificials
    tb.t.assign((m + 1) * (tb.ncols + 1), 0.0);
    tb.basis.resize(m);

    for (std::size_t i = 0; i < m; ++i) {
        const double s = (b[i] < 0.0) ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) tb.at(i, j) = s * A[i][j];
        tb.at(i, n + i) = 1.0;
        tb.rhs(i) = s * b[i];
        tb.basis[i] = static_cast<int>(n + i);
    }
    // Phase-1 cost: minimize the sum of artificials. With artificials basic,
    // reduced costs are -(column sums over structural columns) and the
    // objective cell starts at -(sum b).
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t i = 0; i < m; ++i) s += tb.at(i, j);
        tb.cost(j) = -s;
    }
    double sb = 0;
    for (std::size_t i = 0; i < m; ++i) sb += tb.rhs(i);
    tb.at(m, tb.ncols) = -sb;

    r.status = run_simplex(tb, n, opt, r.pivots);  // artificials never re-enter
    r.residual = std::max(tb.objective(), 0.0);
    return r;
}

std::vector<double> extract(const Tableau& tb, std::size_t nvars) {
    std::vector<double> x(nvars, 0.0);
    for (std::size_t i = 0; i < tb.m; ++i) {
        const int bj = tb.basis[i];
        if (bj >= 0 && static_cast<std::size_t>(bj) < nvars)
            x[bj] = std::max(tb.at(i, tb.ncols), 0.0);
    }
    return x;
}

}  // namespace

Solution phase1(const Matrix& A, const std::vector<double>& b, const Options& opt) {
    Phase1Result p = build_and_run_phase1(A, b, opt);
    Solution s;
    s.pivots = p.pivots;
    s.phase1_residual = p.residual;
    s.objective = p.residual;
    if (p.status == Status::IterationLimit) {
        s.status = Status::IterationLimit;
        return s;
    }
    s.status = (p.residual <= opt.feas_tol) ? Status::Optimal : Status::Infeasible;
    if (s.status == Status::Optimal) s.x = extract(p.tb, p.nvars);
    return s;
}

Solution solve_standard(const Matrix& A, const std::vector<double>& b,
                        const std::vector<double>& c, const Options& opt) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    if (c.size() != n) throw InputError("lp: cost size mismatch");

    Phase1Result p = build_and_run_phase1(A, b, opt);
    Solution s;
    s.pivots = p.pivots;
    s.phase1_residual = p.residual;
    if (p.status == Status::IterationLimit) {
        s.status = Status::IterationLimit;
        return s;
    }
    if (p.residual > opt.feas_tol) {
        s.status = Status::Infeasible;
        s.objective = p.residual;
        return s;
    }

    Tableau& tb = p.tb;
    // Drive artificials out of the basis; rows where no structural pivot
    // exists are redundant and dropped.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < tb.m; ++i) {
        if (static_cast<std::size_t>(tb.basis[i]) < n) {
            keep.push_back(i);
            continue;
        }
        std::size_t pc = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(tb.at(i, j)) > opt.pivot_tol) {
                pc = j;
                break;
            }
        }
        if (pc < n) {
            tb.pivot(i, pc);
            keep.push_back(i);
        }
        // else: redundant row, dropped below
    }
    if (keep.size() != tb.m) {
        Tableau nt;
        nt.m = keep.size();
        nt.ncols = n;
        nt.t.assign((nt.m + 1) * (n + 1), 0.0);
        nt.basis.resize(nt.m);
        for (std::size_t r = 0; r < keep.size(); ++r) {
            for (std::size_t j = 0; j < n; ++j) nt.at(r, j) = tb.at(keep[r], j);
            nt.rhs(r) = tb.at(keep[r], tb.ncols);
            nt.basis[r] = tb.basis[keep[r]];
        }
        tb = nt;
    } else {
        // Truncate artificial columns in place.
        Tableau nt;
        nt.m = tb.m;
        nt.ncols = n;
        nt.t.assign((nt.m + 1) * (n + 1), 0.0);
        nt.basis = tb.basis;
        for (std::size_t i = 0; i < tb.m; ++i) {
            for (std::size_t j = 0; j < n; ++j) nt.at(i, j) = tb.at(i, j);
            nt.rhs(i) = tb.at(i, tb.ncols);
        }
        tb = nt;
    }

    // Phase-2 cost row from the original costs: r_j = c_j - c_B' (B^-1 A_j).
    for (std::size_t j = 0; j < n; ++j) {
        double r = c[j];
        for (std::size_t i = 0; i < tb.m; ++i) r -= c[tb.basis[i]] * tb.at(i, j);
        tb.cost(j) = r;
    }
    double obj = 0;
    for (std::size_t i = 0; i < tb.m; ++i) obj += c[tb.basis[i]] * tb.rhs(i);
    tb.at(tb.m, tb.ncols) = -obj;

    int pivots2 = 0;
    Status st = run_simplex(tb, n, opt, pivots2);
    s.pivots += pivots2;
    s.status = st;
    if (st == Status::Optimal) {
        s.x = extract(tb, n);
        s.objective = tb.objective();
    }
    return s;
}

}  // namespace icv::lp
