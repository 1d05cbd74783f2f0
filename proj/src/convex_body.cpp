#include "icv/convex_body.hpp"

#include <algorithm>
#include <cmath>

#include "icv/errors.hpp"
#include "icv/lp.hpp"

namespace icv {

double pnorm(const Vector& x, PNorm p) {
    switch (p) {
        case PNorm::One: return x.norm1();
        case PNorm::Two: return x.norm2();
        case PNorm::Inf: return x.norm_inf();
    }
    return 0;
}

double dual_pnorm(const Covector& c, PNorm p) {
    double s = 0;
    switch (p) {
        case PNorm::One:
            for (std::size_t i = 0; i < c.dim(); ++i) s = std::max(s, std::abs(c[i]));
            return s;
        case PNorm::Two: return c.norm2();
        case PNorm::Inf:
            for (std::size_t i = 0; i < c.dim(); ++i) s += std::abs(c[i]);
            return s;
    }
    return 0;
}

ConvexBody ConvexBody::vpolytope(std::vector<Vector> vertices) {
    if (vertices.empty()) throw InputError("ConvexBody: V-polytope needs at least one vertex");
    const std::size_t n = vertices[0].dim();
    for (const auto& v : vertices) check_same_dim(v.dim(), n, "ConvexBody::vpolytope");
    ConvexBody b;
    b.kind_ = Kind::VPolytope;
    b.dim_ = n;
    b.vertices_ = std::move(vertices);
    return b;
}

ConvexBody ConvexBody::ball(PNorm p, double radius, std::size_t dim) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InputError("ConvexBody: ball radius must be positive");
    if (dim < 1 || dim > kMaxDimension) throw InputError("ConvexBody: bad ball dimension");
    ConvexBody b;
    b.kind_ = Kind::NormBall;
    b.dim_ = dim;
    b.p_ = p;
    b.radius_ = radius;
    return b;
}

ConvexBody ConvexBody::singleton(Vector point) {
    ConvexBody b;
    b.kind_ = Kind::Singleton;
    b.dim_ = point.dim();
    b.point_ = std::move(point);
    return b;
}

const std::vector<Vector>& ConvexBody::vertices() const {
    if (kind_ != Kind::VPolytope) throw InputError("ConvexBody: not a V-polytope");
    return vertices_;
}

PNorm ConvexBody::ball_p() const {
    if (kind_ != Kind::NormBall) throw InputError("ConvexBody: not a ball");
    return p_;
}

double ConvexBody::ball_radius() const {
    if (kind_ != Kind::NormBall) throw InputError("ConvexBody: not a ball");
    return radius_;
}

const Vector& ConvexBody::point() const {
    if (kind_ != Kind::Singleton) throw InputError("ConvexBody: not a singleton");
    return point_;
}

double ConvexBody::support(const Covector& xstar) const {
    check_same_dim(xstar.dim(), dim_, "ConvexBody::support");
    switch (kind_) {
        case Kind::VPolytope: {
            double best = pairing(xstar, vertices_[0]);
            for (std::size_t i = 1; i < vertices_.size(); ++i)
                best = std::max(best, pairing(xstar, vertices_[i]));
            return best;
        }
        case Kind::NormBall: return radius_ * dual_pnorm(xstar, p_);
        case Kind::Singleton: return pairing(xstar, point_);
    }
    return 0;
}

Vector ConvexBody::support_point(const Covector& xstar) const {
    check_same_dim(xstar.dim(), dim_, "ConvexBody::support_point");
    switch (kind_) {
        case Kind::VPolytope: {
            std::size_t best = 0;
            for (std::size_t i = 1; i < vertices_.size(); ++i)
                if (pairing(xstar, vertices_[i]) > pairing(xstar, vertices_[best])) best = i;
            return vertices_[best];
        }
        case Kind::Singleton: return point_;
        case Kind::NormBall: {
            Vector u = Vector::zero(dim_);
            switch (p_) {
                case PNorm::Two: {
                    const double n2 = xstar.norm2();
                    if (n2 <= 1e-15) { u[0] = radius_; return u; }
                    for (std::size_t i = 0; i < dim_; ++i) u[i] = radius_ * xstar[i] / n2;
                    return u;
                }
                case PNorm::Inf:
                    for (std::size_t i = 0; i < dim_; ++i) u[i] = xstar[i] >= 0 ? radius_ : -radius_;
                    return u;
                case PNorm::One: {
                    std::size_t best = 0;
                    for (std::size_t i = 1; i < dim_; ++i)
                        if (std::abs(xstar[i]) > std::abs(xstar[best])) best = i;
                    u[best] = xstar[best] >= 0 ? radius_ : -radius_;
                    return u;
                }
            }
            return u;
        }
    }
    return Vector::zero(dim_);
}

double vpolytope_membership_residual(const std::vector<Vector>& vertices, const Vector& x) {
    const std::size_t n = x.dim();
    const std::size_t k = vertices.size();
    // sum lambda_i v_i = x, sum lambda_i = 1, lambda >= 0.
    lp::Matrix A(n + 1, std::vector<double>(k));
    std::vector<double> b(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) A[i][j] = vertices[j][i];
        b[i] = x[i];
    }
    for (std::size_t j = 0; j < k; ++j) A[n][j] = 1.0;
    b[n] = 1.0;

    lp::Options opt;
    opt.feas_tol = 0.0;  // report the raw residual; caller applies tolerance
    lp::Solution s = lp::phase1(A, b, opt);
    if (s.status == lp::Status::IterationLimit)
        throw InternalError("vpolytope membership: simplex pivot budget exceeded");
    return s.phase1_residual;
}

bool vpolytope_contains(const std::vector<Vector>& vertices, const Vector& x, double tol) {
    const double slop = 1e-10 * (1.0 + x.norm1());
    return vpolytope_membership_residual(vertices, x) <= tol + slop;
}

bool ConvexBody::contains(const Vector& x, double tol) const {
    check_same_dim(x.dim(), dim_, "ConvexBody::contains");
    if (tol < 0) throw InputError("ConvexBody::contains: tol must be >= 0");
    switch (kind_) {
        case Kind::VPolytope: return vpolytope_contains(vertices_, x, tol);
        case Kind::NormBall: return pnorm(x, p_) <= radius_ + tol;
        case Kind::Singleton:
            return (x - point_).norm2() <= tol + 1e-12 * (1.0 + point_.norm2());
    }
    return false;
}

double ConvexBody::body_norm() const {
    switch (kind_) {
        case Kind::VPolytope: {
            double best = 0;
            for (const auto& v : vertices_) best = std::max(best, v.norm2());
            return best;
        }
        case Kind::NormBall:
            // Largest Euclidean norm on the unit p-ball: 1 for p in {1,2},
            // sqrt(n) at a corner for p = inf.
            switch (p_) {
                case PNorm::One: return radius_;
                case PNorm::Two: return radius_;
                case PNorm::Inf: return radius_ * std::sqrt(static_cast<double>(dim_));
            }
            return radius_;
        case Kind::Singleton: return point_.norm2();
    }
    return 0;
}

bool ConvexBody::is_zero(double tol) const {
    switch (kind_) {
        case Kind::NormBall: return false;
        case Kind::Singleton: return point_.norm2() <= tol;
        case Kind::VPolytope: {
            for (const auto& v : vertices_)
                if (v.norm2() > tol) return false;
            return true;
        }
    }
    return false;
}

std::optional<std::vector<Vector>> ConvexBody::as_vertex_set() const {
    switch (kind_) {
        case Kind::VPolytope: return vertices_;
        case Kind::Singleton: return std::vector<Vector>{point_};
        case Kind::NormBall: {
            if (p_ == PNorm::One) {
                std::vector<Vector> vs;
                for (std::size_t i = 0; i < dim_; ++i) {
                    Vector e = Vector::zero(dim_);
                    e[i] = radius_;
                    vs.push_back(e);
                    e[i] = -radius_;
                    vs.push_back(e);
                }
                return vs;
            }
            if (p_ == PNorm::Inf && dim_ <= 4) {
                std::vector<Vector> vs;
                for (std::size_t m = 0; m < (1u << dim_); ++m) {
                    Vector v = Vector::zero(dim_);
                    for (std::size_t i = 0; i < dim_; ++i)
                        v[i] = (m >> i & 1u) ? radius_ : -radius_;
                    vs.push_back(v);
                }
                return vs;
            }
            return std::nullopt;  // Euclidean (or high-dim inf) balls
        }
    }
    return std::nullopt;
}

}  // namespace icv
