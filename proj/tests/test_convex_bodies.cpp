#include <doctest.h>

#include <cmath>

#include "icv/convex_body.hpp"
#include "icv/errors.hpp"
#include "icv/rng.hpp"

using namespace icv;

namespace {

// Independent support oracle: maximize the pairing over many membership-
// checked sample points (lower bound on the true support).
double sampled_support(const ConvexBody& F, const Covector& c, int k, Rng& rng) {
    double best = -1e300;
    if (auto vs = F.as_vertex_set()) {
        for (int i = 0; i < k; ++i) {
            auto w = rng.simplex_weights(vs->size());
            Vector p = Vector::zero(F.dim());
            for (std::size_t j = 0; j < vs->size(); ++j) p = p + w[j] * (*vs)[j];
            best = std::max(best, pairing(c, p));
        }
    }
    return best;
}

}  // namespace

TEST_CASE("support: exact values") {
    const auto simplex = ConvexBody::vpolytope({Vector{1, 0}, Vector{0, 1}});
    // Oracle: max over the two vertices of <(1,1), v> = max(1, 1) = 1.
    CHECK(simplex.support(Covector{1, 1}) == doctest::Approx(1.0));

    const auto ball = ConvexBody::ball(PNorm::Two, 1.0, 2);
    CHECK(ball.support(Covector{3, 4}) == doctest::Approx(5.0));

    const auto zero = ConvexBody::singleton(Vector{0, 0});
    CHECK(zero.support(Covector{17, -3}) == doctest::Approx(0.0));
}

TEST_CASE("support: dimension mismatch is an input error") {
    const auto ball = ConvexBody::ball(PNorm::Two, 1.0, 2);
    CHECK_THROWS_AS(ball.support(Covector{1, 2, 3}), InputError);
}

TEST_CASE("contains: V-polytope membership via phase-1 feasibility") {
    const auto diamond =
        ConvexBody::vpolytope({Vector{1, 0}, Vector{-1, 0}, Vector{0, 1}, Vector{0, -1}});
    CHECK(diamond.contains(Vector{0.5, 0.5}, 0.0));   // boundary point
    CHECK(!diamond.contains(Vector{0.6, 0.6}, 0.0));  // 1-norm 1.2 > 1
    const auto segment = ConvexBody::vpolytope({Vector{1, 0}, Vector{-1, 0}});
    CHECK(segment.contains(Vector{0, 0}, 0.0));  // midpoint
    CHECK(!segment.contains(Vector{0, 0.1}, 0.0));
}

TEST_CASE("body_norm: exact values") {
    const auto diamond =
        ConvexBody::vpolytope({Vector{1, 0}, Vector{-1, 0}, Vector{0, 1}, Vector{0, -1}});
    CHECK(diamond.body_norm() == doctest::Approx(1.0));
    // Corner (1,1) of the inf-ball has Euclidean norm sqrt(2).
    const auto box = ConvexBody::ball(PNorm::Inf, 1.0, 2);
    CHECK(box.body_norm() == doctest::Approx(std::sqrt(2.0)));
    CHECK(ConvexBody::singleton(Vector{0, 0}).body_norm() == doctest::Approx(0.0));
}

TEST_CASE("support is positively homogeneous and subadditive in the covector") {
    Rng rng(11);
    const auto bodies = {
        ConvexBody::vpolytope({Vector{1, 0.5}, Vector{-0.3, 1}, Vector{0.2, -1.4}}),
        ConvexBody::ball(PNorm::One, 1.5, 2),
        ConvexBody::ball(PNorm::Inf, 0.7, 2),
    };
    for (const auto& F : bodies) {
        for (int i = 0; i < 200; ++i) {
            const Covector c = as_covector(rng.normal_vector(2));
            const Covector d = as_covector(rng.normal_vector(2));
            const double lam = rng.uniform(0.01, 5.0);
            const double sc = F.support(c);
            CHECK(F.support(lam * c) ==
                  doctest::Approx(lam * sc).epsilon(1e-12).scale(std::max(1.0, lam * sc)));
            CHECK(F.support(c + d) <= sc + F.support(d) + 1e-12);
        }
    }
}

TEST_CASE("sampled members never beat the support value") {
    Rng rng(12);
    const auto F = ConvexBody::vpolytope({Vector{2, 0}, Vector{0, 1}, Vector{-1, -1}});
    for (int i = 0; i < 50; ++i) {
        const Covector c = as_covector(rng.normal_vector(2));
        const double s = F.support(c);
        for (int j = 0; j < 50; ++j) {
            auto w = rng.simplex_weights(3);
            Vector u = Vector::zero(2);
            for (std::size_t v = 0; v < 3; ++v) u = u + w[v] * F.vertices()[v];
            REQUIRE(F.contains(u, 1e-9));
            CHECK(pairing(c, u) <= s + 1e-9);
        }
    }
}

TEST_CASE("body_norm matches support maximized over sampled unit covectors") {
    Rng rng(13);
    for (int t = 0; t < 5; ++t) {
        std::vector<Vector> vs;
        const int nv = 3 + static_cast<int>(rng.below(5));
        for (int i = 0; i < nv; ++i)
            vs.push_back(Vector{rng.uniform(-2, 2), rng.uniform(-2, 2)});
        const auto F = ConvexBody::vpolytope(vs);
        double best = 0;
        for (int i = 0; i < 4096; ++i)
            best = std::max(best, F.support(as_covector(rng.unit_vector(2))));
        // Sampling is a lower bound; the exact value dominates within 2%.
        CHECK(best <= F.body_norm() * (1 + 1e-12));
        CHECK(best >= F.body_norm() * 0.98);
    }
}

TEST_CASE("vertex sets for 1- and inf-balls") {
    const auto cross = ConvexBody::ball(PNorm::One, 2.0, 2);
    auto vs = cross.as_vertex_set();
    REQUIRE(vs.has_value());
    CHECK(vs->size() == 4);
    const auto ball = ConvexBody::ball(PNorm::Two, 1.0, 2);
    CHECK(!ball.as_vertex_set().has_value());
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(ConvexBody::vpolytope({}), InputError);
    CHECK_THROWS_AS(ConvexBody::ball(PNorm::Two, 0.0, 2), InputError);
    CHECK_THROWS_AS(ConvexBody::ball(PNorm::Two, -1.0, 2), InputError);
    CHECK_THROWS_AS(Vector({}), InputError);
    CHECK_THROWS_AS(Vector({std::nan("")}), InputError);
}

TEST_CASE("sampled support stays below the exact support (cross-check helper)") {
    Rng rng(14);
    const auto F = ConvexBody::vpolytope({Vector{1, 1}, Vector{-1, 2}, Vector{0, -2}});
    const Covector c{0.3, -1.2};
    CHECK(sampled_support(F, c, 2000, rng) <= F.support(c) + 1e-12);
}
