#pragma once

#include <optional>
#include <vector>

#include "icv/vec.hpp"

namespace icv {

enum class PNorm { One, Two, Inf };

double pnorm(const Vector& x, PNorm p);
// Norm of a covector in the dual of the p-norm.
double dual_pnorm(const Covector& c, PNorm p);

// Closed bounded convex set: V-polytope, origin-centered p-norm ball, or a
// single point.
class ConvexBody {
public:
    enum class Kind { VPolytope, NormBall, Singleton };

    static ConvexBody vpolytope(std::vector<Vector> vertices);
    static ConvexBody ball(PNorm p, double radius, std::size_t dim);
    static ConvexBody singleton(Vector point);

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }

    const std::vector<Vector>& vertices() const;  // VPolytope only
    PNorm ball_p() const;                         // NormBall only
    double ball_radius() const;                   // NormBall only
    const Vector& point() const;                  // Singleton only

    // sup over u in F of <xstar, u>. Exact: vertex max / dual norm / pairing.
    double support(const Covector& xstar) const;

    // A maximizer of <xstar, u> over the body.
    Vector support_point(const Covector& xstar) const;

    // Membership up to tol. V-polytopes use a phase-1 simplex on the convex
    // combination system; balls compare norms.
    bool contains(const Vector& x, double tol) const;

    // sup of Euclidean norms over the body.
    double body_norm() const;

    bool is_zero(double tol = 0.0) const;  // the body {0}

    // Vertex representation when available (polytopes, singletons, 1/inf
    // balls in low dimension). Euclidean balls have none.
    std::optional<std::vector<Vector>> as_vertex_set() const;

private:
    ConvexBody() = default;
    Kind kind_ = Kind::Singleton;
    std::size_t dim_ = 0;
    std::vector<Vector> vertices_;
    PNorm p_ = PNorm::Two;
    double radius_ = 1.0;
    Vector point_;
};

// Phase-1 membership residual for x in conv(vertices); the membership test
// accepts when it is <= tol plus a small relative slop.
double vpolytope_membership_residual(const std::vector<Vector>& vertices, const Vector& x);
bool vpolytope_contains(const std::vector<Vector>& vertices, const Vector& x, double tol);

}  // namespace icv
