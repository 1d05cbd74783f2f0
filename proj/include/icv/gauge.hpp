#pragma once

#include "icv/convex_body.hpp"
#include "icv/ext_real.hpp"
#include "icv/vec.hpp"

namespace icv {

// Gauge of a closed bounded convex body F: rho(x) = inf { t >= 0 : x in tF }.
// For the body {0} the gauge is the indicator of {0} and the coercivity
// constant is a configured positive number.
class Gauge {
public:
    explicit Gauge(ConvexBody body, double zero_body_constant = 1.0);

    const ConvexBody& body() const { return body_; }
    std::size_t dim() const { return body_.dim(); }

    // Exact evaluation: LP for V-polytopes (min 1'mu s.t. V mu = x, mu >= 0,
    // via the substitution mu = t*lambda), closed form for balls, clamped
    // least squares for singletons. +inf outside cone(F).
    ExtReal eval(const Vector& x) const;
    ExtReal operator()(const Vector& x) const { return eval(x); }

    // Independent bisection oracle on the monotone sublevel predicate
    // rho(x) <= t  <=>  x in conv(tF U {0}). Agrees with eval within tol.
    ExtReal eval_bisection(const Vector& x, double tol) const;

    // m with m*||x|| <= rho(x); equals 1/||F|| for nonzero F.
    double coercivity_constant() const;

    // Exact membership in the subdifferential of the gauge at 0:
    // sup over u in F of <xstar, u> <= 1 + tol.
    bool polar_contains(const Covector& xstar, double tol) const;

private:
    ConvexBody body_;
    double m_zero_ = 1.0;
    bool zero_body_ = false;
};

}  // namespace icv
