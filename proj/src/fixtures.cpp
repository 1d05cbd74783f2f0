#include <cmath>

#include "icv/errors.hpp"
#include "icv/verifier.hpp"

namespace icv {

Fixture::Fixture(std::string name_, ConvexBody F_, Region omega_, FieldPtr J_,
                 std::vector<Vector> base_points_, std::optional<double> known_ell_)
    : name(std::move(name_)),
      dimension(F_.dim()),
      F(std::move(F_)),
      omega(std::move(omega_)),
      J(std::move(J_)),
      base_points(std::move(base_points_)),
      known_ell(known_ell_),
      gauge(F),
      phi(gauge_field(gauge)),
      f(J ? perturbed(J, omega) : indicator(omega)),
      T(InfConvolution::make(phi, f)) {
    check_same_dim(omega.dim(), dimension, "Fixture");
    if (base_points.empty()) throw InputError("Fixture: needs at least one base point");
    if (known_ell && !(*known_ell < gauge.coercivity_constant()))
        throw InputError("Fixture '" + name + "': known_ell must be < coercivity constant");
    for (const auto& bp : base_points)
        if (!is_in_S0(T, bp, 1e-7))
            throw InputError("Fixture '" + name + "': base point " + bp.str() +
                             " is not in S0 at tol 1e-7");
}

namespace {

ConvexBody unit_ball2(std::size_t dim) { return ConvexBody::ball(PNorm::Two, 1.0, dim); }

Region unit_square() {
    return Region::halfspaces({
        Halfspace{Covector{1.0, 0.0}, 1.0},
        Halfspace{Covector{0.0, 1.0}, 1.0},
        Halfspace{Covector{-1.0, 0.0}, 0.0},
        Halfspace{Covector{0.0, -1.0}, 0.0},
    });
}

std::vector<Vector> five_point_cloud() {
    return {Vector{0.0, 0.0}, Vector{1.0, 0.0}, Vector{0.0, 1.5}, Vector{-1.2, 0.3},
            Vector{0.4, -0.8}};
}

FieldPtr slope_table(double slope) {
    std::vector<std::pair<Vector, double>> entries;
    for (const auto& p : five_point_cloud()) entries.emplace_back(p, slope * p.norm2());
    return table_field(std::move(entries));
}

}  // namespace

std::vector<std::string> bundled_fixture_names() {
    return {"two_point_cloud",  "half_plane",        "square_simplex_origin",
            "square_simplex_offset", "perturbed_l0_m1", "perturbed_l03_m1",
            "perturbed_l03_m05",     "perturbed_l2_m1", "line_1d"};
}

Fixture bundled_fixture(const std::string& name) {
    if (name == "two_point_cloud") {
        return Fixture(name, unit_ball2(2),
                       Region::point_cloud({Vector{3.0, 0.0}, Vector{0.0, 4.0}}), nullptr,
                       {Vector{3.0, 0.0}, Vector{0.0, 4.0}}, 0.0);
    }
    if (name == "half_plane") {
        return Fixture(name, unit_ball2(2),
                       Region::halfspaces({Halfspace{Covector{0.0, 1.0}, 0.0}}), nullptr,
                       {Vector{0.0, 0.0}, Vector{1.0, -1.0}}, 0.0);
    }
    if (name == "square_simplex_origin") {
        // 0 lies in the interior of F; the gauge is finite everywhere.
        return Fixture(name,
                       ConvexBody::vpolytope(
                           {Vector{1.0, 0.0}, Vector{0.0, 1.0}, Vector{-1.0, -1.0}}),
                       unit_square(), nullptr,
                       {Vector{1.0, 1.0}, Vector{1.0, 0.5}, Vector{0.5, 0.5}}, 0.0);
    }
    if (name == "square_simplex_offset") {
        // 0 is outside F; the gauge is +inf off the first quadrant.
        return Fixture(name,
                       ConvexBody::vpolytope(
                           {Vector{1.0, 0.0}, Vector{0.0, 1.0}, Vector{1.0, 1.0}}),
                       unit_square(), nullptr, {Vector{1.0, 1.0}, Vector{0.5, 0.5}}, 0.0);
    }
    if (name == "perturbed_l0_m1") {
        return Fixture(name, unit_ball2(2), Region::point_cloud(five_point_cloud()),
                       slope_table(0.0), {Vector{0.0, 0.0}, Vector{1.0, 0.0}}, 0.0);
    }
    if (name == "perturbed_l03_m1") {
        return Fixture(name, unit_ball2(2), Region::point_cloud(five_point_cloud()),
                       slope_table(0.3), {Vector{0.0, 0.0}, Vector{1.0, 0.0}}, 0.3);
    }
    if (name == "perturbed_l03_m05") {
        return Fixture(name, ConvexBody::ball(PNorm::Two, 2.0, 2),
                       Region::point_cloud(five_point_cloud()), slope_table(0.3),
                       {Vector{0.0, 0.0}, Vector{1.0, 0.0}}, 0.3);
    }
    if (name == "perturbed_l2_m1") {
        // Slope 2 exceeds m = 1: equality checks must gate on the estimated
        // calm constant. S0 still contains the anchor (J has its minimum
        // there), so the fixture invariant holds.
        return Fixture(name, unit_ball2(2), Region::point_cloud(five_point_cloud()),
                       slope_table(2.0), {Vector{0.0, 0.0}}, std::nullopt);
    }
    if (name == "line_1d") {
        return Fixture(name, ConvexBody::vpolytope({Vector{-1.0}, Vector{2.0}}),
                       Region::halfspaces({Halfspace{Covector{-1.0}, 0.0}}), nullptr,
                       {Vector{0.0}, Vector{1.0}}, 0.0);
    }
    throw InputError("unknown fixture '" + name + "'");
}

}  // namespace icv
