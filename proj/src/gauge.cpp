#include "icv/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "icv/errors.hpp"
#include "icv/lp.hpp"

namespace icv {

Gauge::Gauge(ConvexBody body, double zero_body_constant)
    : body_(std::move(body)), m_zero_(zero_body_constant) {
    if (!(m_zero_ > 0.0) || !std::isfinite(m_zero_))
        throw InputError("Gauge: zero-body constant must be positive");
    zero_body_ = body_.is_zero();
}

ExtReal Gauge::eval(const Vector& x) const {
    check_same_dim(x.dim(), dim(), "Gauge::eval");
    if (x.norm2() == 0.0) return 0.0;
    if (zero_body_) return ExtReal::infinity();

    switch (body_.kind()) {
        case ConvexBody::Kind::NormBall:
            return pnorm(x, body_.ball_p()) / body_.ball_radius();

        case ConvexBody::Kind::Singleton: {
            // x = t v with t >= 0, tested by clamped least squares.
            const Vector& v = body_.point();
            double vv = 0, xv = 0;
            for (std::size_t i = 0; i < x.dim(); ++i) {
                vv += v[i] * v[i];
                xv += x[i] * v[i];
            }
            double t = std::max(xv / vv, 0.0);
            if ((x - t * v).norm2() <= 1e-9 * (1.0 + x.norm2())) return t;
            return ExtReal::infinity();
        }

        case ConvexBody::Kind::VPolytope: {
            const auto& vs = body_.vertices();
            const std::size_t n = x.dim(), k = vs.size();
            lp::Matrix A(n, std::vector<double>(k));
            std::vector<double> b(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < k; ++j) A[i][j] = vs[j][i];
                b[i] = x[i];
            }
            std::vector<double> c(k, 1.0);
            lp::Options opt;
            opt.feas_tol = 1e-8 * (1.0 + x.norm2());
            lp::Solution s = lp::solve_standard(A, b, c, opt);
            if (s.status == lp::Status::IterationLimit)
                throw InternalError("Gauge::eval: simplex pivot budget exceeded");
            if (s.status == lp::Status::Infeasible) return ExtReal::infinity();
            if (s.status != lp::Status::Optimal)
                throw InternalError("Gauge::eval: unexpected LP status");
            return std::max(s.objective, 0.0);
        }
    }
    return ExtReal::infinity();
}

ExtReal Gauge::eval_bisection(const Vector& x, double tol) const {
    check_same_dim(x.dim(), dim(), "Gauge::eval_bisection");
    if (!(tol > 0.0)) throw InputError("Gauge::eval_bisection: tol must be > 0");
    if (x.norm2() == 0.0) return 0.0;
    if (zero_body_) return ExtReal::infinity();

    // rho(x) <= t  <=>  x in [0,t]*F = conv(tF U {0}).  Raw "x in tF" is not
    // monotone in t when 0 is outside F, so the probe goes through the
    // 0-augmented body.
    auto sublevel = [&](double t) {
        switch (body_.kind()) {
            case ConvexBody::Kind::NormBall:
                return body_.contains((1.0 / t) * x, 0.0);
            case ConvexBody::Kind::Singleton: {
                std::vector<Vector> seg{Vector::zero(x.dim()), t * body_.point()};
                return vpolytope_contains(seg, x, 0.0);
            }
            case ConvexBody::Kind::VPolytope: {
                std::vector<Vector> vs;
                vs.reserve(body_.vertices().size() + 1);
                vs.push_back(Vector::zero(x.dim()));
                for (const auto& v : body_.vertices()) vs.push_back(t * v);
                return vpolytope_contains(vs, x, 0.0);
            }
        }
        return false;
    };

    const double m = coercivity_constant();
    double hi = x.norm2() * (10.0 / m);
    int doublings = 0;
    while (!sublevel(hi)) {
        if (++doublings > 60) return ExtReal::infinity();
        hi *= 2.0;
    }
    double lo = 0.0;  // rho(x) > 0 since x != 0 and F is bounded
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (sublevel(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double Gauge::coercivity_constant() const {
    if (zero_body_) return m_zero_;
    return 1.0 / body_.body_norm();
}

bool Gauge::polar_contains(const Covector& xstar, double tol) const {
    check_same_dim(xstar.dim(), dim(), "Gauge::polar_contains");
    if (tol < 0) throw InputError("Gauge::polar_contains: tol must be >= 0");
    if (zero_body_) return true;  // support of {0} is 0
    return body_.support(xstar) <= 1.0 + tol;
}

}  // namespace icv
