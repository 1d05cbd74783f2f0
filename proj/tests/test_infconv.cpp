#include <doctest.h>

#include <cmath>
#include <limits>

#include "icv/errors.hpp"
#include "icv/infconv.hpp"
#include "icv/rng.hpp"

using namespace icv;

namespace {

// Brute-force oracle for point-cloud targets: enumerate the candidates.
double brute_min_time(const Gauge& g, const std::vector<Vector>& cloud, const Vector& x,
                      const std::vector<double>* jvals = nullptr) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const ExtReal r = g.eval(cloud[i] - x);
        if (!r.finite()) continue;
        best = std::min(best, r.value() + (jvals ? (*jvals)[i] : 0.0));
    }
    return best;
}

}  // namespace

TEST_CASE("exact enumeration over a two-point target") {
    const auto phi = norm_field(2, PNorm::Two);
    const auto f = indicator(Region::point_cloud({Vector{3, 0}, Vector{0, 4}}));
    const auto T = InfConvolution::make(phi, f);
    CHECK(T.strategy() == InfConvStrategy::ExactEnumeration);

    // Oracle: min(||(3,0)||, ||(0,4)||) = 3 at (3,0).
    auto v = T.eval(Vector{0, 0});
    CHECK(v.value.value() == doctest::Approx(3.0));
    REQUIRE(v.minimizers.size() == 1);
    CHECK(v.minimizers[0].point[0] == doctest::Approx(3.0));

    // x in Omega: phi(0) + 0 = 0.
    CHECK(T.eval(Vector{3, 0}).value.value() == doctest::Approx(0.0));
}

TEST_CASE("perturbed enumeration picks the cheaper total") {
    const auto phi = norm_field(2, PNorm::Two);
    const auto J = table_field({{Vector{3, 0}, 5.0}, {Vector{0, 4}, 0.0}});
    const auto f = perturbed(J, Region::point_cloud({Vector{3, 0}, Vector{0, 4}}));
    const auto T = InfConvolution::make(phi, f);
    // Oracle: min(3 + 5, 4 + 0) = 4 at (0,4).
    auto v = T.eval(Vector{0, 0});
    CHECK(v.value.value() == doctest::Approx(4.0));
    REQUIRE(v.minimizers.size() == 1);
    CHECK(v.minimizers[0].point[1] == doctest::Approx(4.0));
}

TEST_CASE("minimal time with a singleton velocity set") {
    const auto F = ConvexBody::singleton(Vector{1, 0});
    const auto omega = Region::point_cloud({Vector{2, 0}});
    // Ray reachability: (2,0) = 2 * (1,0).
    CHECK(minimal_time(F, omega, Vector{0, 0}).value.value() == doctest::Approx(2.0));
    // Backwards would need t * (1,0) = (-1,0) with t >= 0: unreachable.
    CHECK(minimal_time(F, omega, Vector{3, 0}).value.infinite());
}

TEST_CASE("minimal time with the unit ball is the distance") {
    Rng rng(31);
    const Gauge g(ConvexBody::ball(PNorm::Two, 1.0, 2));
    for (int t = 0; t < 20; ++t) {
        std::vector<Vector> cloud;
        for (int i = 0; i < 5; ++i) cloud.push_back(Vector{rng.uniform(-3, 3), rng.uniform(-3, 3)});
        const auto F = ConvexBody::ball(PNorm::Two, 1.0, 2);
        const auto omega = Region::point_cloud(cloud);
        for (int q = 0; q < 50; ++q) {
            const Vector x{rng.uniform(-4, 4), rng.uniform(-4, 4)};
            double want = std::numeric_limits<double>::infinity();
            for (const auto& w : cloud) want = std::min(want, (w - x).norm2());
            CHECK(minimal_time(F, omega, x).value.value() ==
                  doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("coincidence set membership") {
    const auto phi = norm_field(2, PNorm::Two);
    SUBCASE("indicator: S0 is Omega") {
        const auto f = indicator(Region::point_cloud({Vector{3, 0}, Vector{0, 4}}));
        const auto T = InfConvolution::make(phi, f);
        CHECK(is_in_S0(T, Vector{3, 0}, 1e-9));
        CHECK(!is_in_S0(T, Vector{1, 1}, 1e-9));  // f = +inf off Omega
    }
    SUBCASE("perturbed: the expensive point drops out") {
        const auto J = table_field({{Vector{0, 0}, 0.0}, {Vector{3, 0}, 10.0}});
        const auto f = perturbed(J, Region::point_cloud({Vector{0, 0}, Vector{3, 0}}));
        const auto T = InfConvolution::make(phi, f);
        // T(3,0) = min(10, 3 + 0) = 3 != 10 = f(3,0).
        CHECK(!is_in_S0(T, Vector{3, 0}, 1e-9));
        CHECK(is_in_S0(T, Vector{0, 0}, 1e-9));
    }
}

TEST_CASE("upper bound: T never exceeds f") {
    Rng rng(32);
    const auto phi = gauge_field(Gauge(ConvexBody::vpolytope(
        {Vector{1, 0}, Vector{0, 1}, Vector{-1, -1}})));
    const auto J = table_field({{Vector{0, 0}, 1.0}, {Vector{1, 1}, 0.5}, {Vector{-1, 0}, 2.0}});
    const auto f = perturbed(J, Region::point_cloud({Vector{0, 0}, Vector{1, 1}, Vector{-1, 0}}));
    const auto T = InfConvolution::make(phi, f);
    for (const auto& p : {Vector{0, 0}, Vector{1, 1}, Vector{-1, 0}}) {
        CHECK(T.eval(p, 0.0).value.raw() <= f->eval(p).raw() + 1e-9);
    }
    for (int i = 0; i < 100; ++i) {
        const Vector x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        CHECK(T.eval(x, 0.0).value.raw() <= f->eval(x).raw() + 1e-9);
    }
}

TEST_CASE("polyhedral LP strategy matches dense sampling of the region") {
    Rng rng(33);
    const auto F = ConvexBody::vpolytope({Vector{1, 0}, Vector{0, 1}, Vector{-1, -1}});
    const Gauge g(F);
    const auto omega = Region::halfspaces({
        Halfspace{Covector{1, 0}, 1.0}, Halfspace{Covector{0, 1}, 1.0},
        Halfspace{Covector{-1, 0}, 0.0}, Halfspace{Covector{0, -1}, 0.0}});
    const auto T = minimal_time_infconv(F, omega);
    CHECK(T.strategy() == InfConvStrategy::PolyhedralLp);

    for (int q = 0; q < 25; ++q) {
        const Vector x{rng.uniform(-2, 3), rng.uniform(-2, 3)};
        const ExtReal lp = T.eval(x, 0.0).value;
        // Sampled upper bound on the true infimum.
        double brute = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 4000; ++i) {
            const Vector w{rng.u01(), rng.u01()};
            const ExtReal r = g.eval(w - x);
            if (r.finite()) brute = std::min(brute, r.value());
        }
        REQUIRE(lp.finite());  // 0 in int F: everything reachable
        CHECK(lp.value() <= brute + 1e-9);
        CHECK(brute <= lp.value() + 0.05);
    }
}

TEST_CASE("euclidean projection strategy matches dense sampling") {
    Rng rng(34);
    const auto F = ConvexBody::ball(PNorm::Two, 2.0, 2);  // gauge = norm / 2
    const auto omega = Region::vpolytope({Vector{0, 0}, Vector{1, 0}, Vector{0, 1}});
    const auto T = minimal_time_infconv(F, omega);
    CHECK(T.strategy() == InfConvStrategy::EuclideanProjection);
    for (int q = 0; q < 25; ++q) {
        const Vector x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const double got = T.eval(x, 0.0).value.value();
        double brute = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 4000; ++i) {
            auto w = rng.simplex_weights(3);
            const Vector p = w[1] * Vector{1, 0} + w[2] * Vector{0, 1};
            brute = std::min(brute, 0.5 * (p - x).norm2());
        }
        CHECK(got <= brute + 1e-9);
        CHECK(brute <= got + 0.05);
    }
}

TEST_CASE("grid search is a flagged, monotone upper bound") {
    // Non-polyhedral pairing: perturbed table over a polytope region forces
    // the grid fallback.
    const auto phi = norm_field(2, PNorm::Two);
    const auto region = Region::vpolytope({Vector{0, 0}, Vector{1, 0}, Vector{0, 1}});
    const auto f = perturbed(sum({norm_field(2, PNorm::One)}), region);
    GridSpec grid{Vector{-0.5, -0.5}, Vector{1.5, 1.5}, 64, 3};
    const auto T = InfConvolution::make(phi, f, grid);
    CHECK(T.strategy() == InfConvStrategy::GridSearch);

    const auto v = T.eval(Vector{0.3, 0.4}, 1e-9);
    CHECK(v.approximate);
    REQUIRE(v.value.finite());
    REQUIRE(v.grid_level_values.size() == 3);
    CHECK(v.grid_level_values[1] <= v.grid_level_values[0] + 1e-12);
    CHECK(v.grid_level_values[2] <= v.grid_level_values[1] + 1e-12);

    // f(y) = ||y||_1 on the triangle; phi = Euclidean norm. The optimum at
    // x = (0.3, 0.4) is y = 0 (cost 0.5) vs y = x (cost 0.7): value 0.5.
    CHECK(v.value.value() == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("grid bounds that miss the domain produce a warning") {
    const auto phi = norm_field(2, PNorm::Two);
    const auto region = Region::vpolytope({Vector{5, 5}, Vector{6, 5}, Vector{5, 6}});
    const auto f = perturbed(sum({norm_field(2, PNorm::One)}), region);
    GridSpec grid{Vector{-1, -1}, Vector{1, 1}, 32, 2};
    const auto T = InfConvolution::make(phi, f, grid);
    const auto v = T.eval(Vector{0, 0}, 0.0);
    CHECK(v.value.infinite());
    CHECK(!v.warning.empty());
}

TEST_CASE("grid search without bounds is an input error") {
    const auto phi = norm_field(2, PNorm::Two);
    const auto region = Region::vpolytope({Vector{0, 0}, Vector{1, 0}, Vector{0, 1}});
    const auto f = perturbed(sum({norm_field(2, PNorm::One)}), region);
    CHECK_THROWS_AS(InfConvolution::make(phi, f), InputError);
}

TEST_CASE("phi must vanish at the origin") {
    const auto bad_phi = table_field({{Vector{0, 0}, 1.0}});
    const auto f = indicator(Region::point_cloud({Vector{1, 0}}));
    CHECK_THROWS_AS(InfConvolution::make(bad_phi, f), InputError);
}

TEST_CASE("tied minimizers are all reported in lexicographic order") {
    const auto phi = norm_field(2, PNorm::Two);
    const auto f = indicator(Region::point_cloud({Vector{1, 0}, Vector{-1, 0}}));
    const auto T = InfConvolution::make(phi, f);
    const auto v = T.eval(Vector{0, 0}, 1e-9);
    CHECK(v.value.value() == doctest::Approx(1.0));
    REQUIRE(v.minimizers.size() == 2);
    CHECK(v.minimizers[0].point[0] == doctest::Approx(-1.0));
    CHECK(v.minimizers[1].point[0] == doctest::Approx(1.0));
}

TEST_CASE("reported minimizers respect the objective bound") {
    Rng rng(35);
    const Gauge g(ConvexBody::ball(PNorm::Two, 1.0, 2));
    std::vector<Vector> cloud;
    std::vector<double> jv;
    std::vector<std::pair<Vector, double>> entries;
    for (int i = 0; i < 6; ++i) {
        cloud.push_back(Vector{rng.uniform(-2, 2), rng.uniform(-2, 2)});
        jv.push_back(rng.uniform(0, 1));
        entries.emplace_back(cloud.back(), jv.back());
    }
    const auto T = InfConvolution::make(norm_field(2, PNorm::Two),
                                        perturbed(table_field(entries),
                                                  Region::point_cloud(cloud)));
    for (int q = 0; q < 50; ++q) {
        const Vector x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const double slack = rng.uniform(0.0, 0.5);
        const auto v = T.eval(x, slack);
        CHECK(v.value.value() == doctest::Approx(brute_min_time(g, cloud, x, &jv)));
        REQUIRE(!v.minimizers.empty());
        for (const auto& mz : v.minimizers)
            CHECK(mz.objective <= v.value.value() + slack + 1e-12);
    }
}

TEST_CASE("union regions take the member minimum") {
    const auto F = ConvexBody::ball(PNorm::Two, 1.0, 2);
    const auto omega = Region::union_of({
        Region::vpolytope({Vector{2, 0}, Vector{3, 0}, Vector{2, 1}}),
        Region::halfspaces({Halfspace{Covector{0, -1}, -5.0}}),  // y >= 5
    });
    const auto T = minimal_time_infconv(F, omega);
    // Distance to the triangle is 2, to the halfplane 5.
    CHECK(T.eval(Vector{0, 0}, 0.0).value.value() == doctest::Approx(2.0));
    CHECK(T.eval(Vector{0, 7}, 0.0).value.value() == doctest::Approx(0.0));
}
