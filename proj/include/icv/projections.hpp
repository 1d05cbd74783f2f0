#pragma once

#include <optional>
#include <vector>

#include "icv/vec.hpp"

namespace icv::geom {

// Gaussian elimination with partial pivoting for tiny systems.
// Returns false when the matrix is (numerically) singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> rhs,
                  std::vector<double>& out, double tol = 1e-12);

struct ProjectionResult {
    Vector point;
    double distance = 0.0;
};

// Euclidean projection of x onto conv(vertices).
// Exact via enumeration of affinely independent vertex subsets (|S| <= n+1):
// the projection lies in the relative interior of the face spanned by its
// minimal support, where it coincides with the affine-hull projection.
ProjectionResult project_onto_vpolytope(const std::vector<Vector>& vertices, const Vector& x);

// Euclidean projection of x onto { y : <rows[i], y> <= offsets[i] }.
// Exact via enumeration of linearly independent active-row subsets (<= n).
// nullopt when the polyhedron is empty.
std::optional<ProjectionResult> project_onto_halfspaces(const std::vector<Covector>& rows,
                                                        const std::vector<double>& offsets,
                                                        const Vector& x);

struct ConeProjection {
    Covector projection;          // nearest point of the cone
    double distance = 0.0;        // Euclidean distance from target to the cone
    Covector residual_direction;  // unit (target - projection); zero when inside
};

// Euclidean projection of target onto cone{generators} (conic hull).
// Exact via subset enumeration with a KKT acceptance check.
ConeProjection project_onto_cone(const std::vector<Covector>& generators, const Covector& target);

}  // namespace icv::geom
