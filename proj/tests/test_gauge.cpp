#include <doctest.h>

#include <cmath>

#include "icv/errors.hpp"
#include "icv/gauge.hpp"
#include "icv/rng.hpp"

using namespace icv;

TEST_CASE("gauge of a segment body: bisection oracle first, then the LP") {
    const Gauge g(ConvexBody::vpolytope({Vector{1, 0}, Vector{0, 1}}));
    // Oracle: smallest t with (2,2) in [0,t]*F; the segment forces
    // 2/t + 2/t = 1, so t = 4. The bisection finds it without the LP.
    const ExtReal oracle = g.eval_bisection(Vector{2, 2}, 1e-8);
    REQUIRE(oracle.finite());
    CHECK(oracle.value() == doctest::Approx(4.0).epsilon(1e-7));
    const ExtReal lp = g.eval(Vector{2, 2});
    REQUIRE(lp.finite());
    CHECK(lp.value() == doctest::Approx(4.0).epsilon(1e-9));

    // cone(F) is the closed first quadrant; (-1,0) is unreachable.
    CHECK(g.eval(Vector{-1, 0}).infinite());
    CHECK(g.eval_bisection(Vector{-1, 0}, 1e-8).infinite());
}

TEST_CASE("gauge reduces to the norm on the unit ball") {
    const Gauge g(ConvexBody::ball(PNorm::Two, 1.0, 2));
    CHECK(g.eval(Vector{3, 4}).value() == doctest::Approx(5.0));
    CHECK(g.eval_bisection(Vector{3, 4}, 1e-8).value() == doctest::Approx(5.0).epsilon(1e-7));
}

TEST_CASE("gauge vanishes at the origin") {
    for (const auto& F : {ConvexBody::vpolytope({Vector{1, 0}, Vector{0, 1}}),
                          ConvexBody::ball(PNorm::Inf, 2.0, 2),
                          ConvexBody::singleton(Vector{1, 1})}) {
        const Gauge g(F);
        CHECK(g.eval(Vector{0, 0}) == ExtReal(0.0));
        CHECK(g.eval_bisection(Vector{0, 0}, 1e-8) == ExtReal(0.0));
    }
}

TEST_CASE("gauge of a singleton uses the clamped ray test") {
    const Gauge g(ConvexBody::singleton(Vector{1, 0}));
    CHECK(g.eval(Vector{2, 0}).value() == doctest::Approx(2.0));
    CHECK(g.eval(Vector{-1, 0}).infinite());  // t would be negative
    CHECK(g.eval(Vector{2, 0.5}).infinite()); // off the ray

    const Gauge z(ConvexBody::singleton(Vector{0, 0}), 7.0);
    CHECK(z.eval(Vector{0, 0}) == ExtReal(0.0));
    CHECK(z.eval(Vector{1, 0}).infinite());
    CHECK(z.eval_bisection(Vector{1, 0}, 1e-8).infinite());
    CHECK(z.coercivity_constant() == doctest::Approx(7.0));
}

TEST_CASE("coercivity constants") {
    CHECK(Gauge(ConvexBody::vpolytope({Vector{1, 0}, Vector{-1, 0}, Vector{0, 1}, Vector{0, -1}}))
              .coercivity_constant() == doctest::Approx(1.0));
    CHECK(Gauge(ConvexBody::ball(PNorm::Inf, 1.0, 2)).coercivity_constant() ==
          doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("polar membership is the support inequality") {
    const Gauge g(ConvexBody::ball(PNorm::Two, 1.0, 2));
    CHECK(g.polar_contains(Covector{0.6, 0.8}, 1e-9));   // support exactly 1
    CHECK(!g.polar_contains(Covector{0.9, 0.8}, 1e-9));  // ~1.204 > 1
    CHECK(g.polar_contains(Covector{0, 0}, 0.0));
}

TEST_CASE("gauge properties on seeded bodies") {
    Rng rng(21);
    const auto bodies = {
        ConvexBody::vpolytope({Vector{1, 0}, Vector{0, 1}, Vector{-1, -1}}),
        ConvexBody::vpolytope({Vector{2, 1}, Vector{1, 2}}),  // 0 outside
        ConvexBody::ball(PNorm::One, 0.5, 2),
    };
    for (const auto& F : bodies) {
        const Gauge g(F);
        const double m = g.coercivity_constant();
        const auto vs = F.as_vertex_set();
        auto sample = [&]() {
            if (rng.u01() < 0.5) {
                auto w = rng.simplex_weights(vs->size());
                Vector p = Vector::zero(2);
                for (std::size_t j = 0; j < vs->size(); ++j) p = p + w[j] * (*vs)[j];
                return rng.uniform(0.0, 2.5) * p;
            }
            return Vector{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        };
        for (int i = 0; i < 300; ++i) {
            const Vector x = sample();
            const Vector y = sample();
            const double lam = rng.uniform(0.1, 4.0);
            const ExtReal gx = g.eval(x);
            const ExtReal gy = g.eval(y);

            // Positive homogeneity.
            const ExtReal gl = g.eval(lam * x);
            CHECK(gl.finite() == gx.finite());
            if (gx.finite())
                CHECK(gl.value() ==
                      doctest::Approx(lam * gx.value()).epsilon(1e-9).scale(1.0));

            // Subadditivity.
            if (gx.finite() && gy.finite())
                CHECK(g.eval(x + y).raw() <= gx.value() + gy.value() + 1e-9);

            // Coercivity.
            if (gx.finite()) CHECK(m * x.norm2() <= gx.value() + 1e-9);

            // Oracle agreement.
            if (i < 60) {
                const ExtReal bis = g.eval_bisection(x, 1e-8);
                CHECK(bis.finite() == gx.finite());
                if (gx.finite()) CHECK(std::abs(bis.value() - gx.value()) <= 1e-7);
            }
        }

        // Polar consistency: members satisfy the subgradient inequality at 0.
        for (int i = 0; i < 100; ++i) {
            const Covector c = as_covector(rng.normal_vector(2));
            if (!g.polar_contains(c, 0.0)) continue;
            for (int j = 0; j < 20; ++j) {
                const Vector x = sample();
                const ExtReal gx = g.eval(x);
                if (gx.finite()) CHECK(pairing(c, x) <= gx.value() + 1e-7);
            }
        }
    }
}

TEST_CASE("bisection tolerance is honored") {
    const Gauge g(ConvexBody::vpolytope({Vector{1, 0}, Vector{0, 1}, Vector{-0.5, -0.5}}));
    Rng rng(22);
    for (int i = 0; i < 40; ++i) {
        const Vector x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const ExtReal lp = g.eval(x);
        const ExtReal bis = g.eval_bisection(x, 1e-10);
        REQUIRE(lp.finite() == bis.finite());
        if (lp.finite()) CHECK(std::abs(lp.value() - bis.value()) <= 1e-9);
    }
}

TEST_CASE("gauge input guards") {
    const Gauge g(ConvexBody::ball(PNorm::Two, 1.0, 2));
    CHECK_THROWS_AS(g.eval(Vector{1, 2, 3}), InputError);
    CHECK_THROWS_AS(g.eval_bisection(Vector{1, 2}, 0.0), InputError);
    CHECK_THROWS_AS(Gauge(ConvexBody::ball(PNorm::Two, 1.0, 2), -1.0), InputError);
}
