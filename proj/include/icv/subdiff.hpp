#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "icv/infconv.hpp"
#include "icv/region.hpp"
#include "icv/vec.hpp"

namespace icv {

// Radial probe grid discretizing the liminf in the subdifferential
// definitions: radii r0 * decay^j for j < levels, a deterministic direction
// set per (seed, dimension): +-1 in R^1, equally spaced angles in R^2,
// a Fibonacci sphere in R^3.
struct SamplingPlan {
    double base_radius = 0.5;
    double decay = 0.5;
    int levels = 20;
    int directions = 0;  // 0 = default for the dimension (2 / 720 / 2000)
    std::uint64_t seed = 0;
    double quotient_tolerance = 1e-6;

    int directions_for(std::size_t dim) const;
    void validate() const;
};

std::vector<Vector> make_directions(std::size_t dim, int count, std::uint64_t seed);

enum class Verdict { Member, NonMember, Undetermined };
const char* verdict_name(Verdict v);

struct Witness {
    Vector x;
    double quotient = 0.0;
};

// Numeric membership evidence. NonMember always carries a witness whose
// quotient violates the defining threshold; Member from a sampled test means
// "no violation found" (one-sided).
struct MembershipResult {
    Verdict verdict = Verdict::Undetermined;
    std::optional<Witness> witness;
    double worst_quotient = 0.0;
};

struct SubdiffKind {
    enum class Tag { Frechet, Holder };
    Tag tag = Tag::Frechet;
    double param = 0.0;  // epsilon (>= 0) or s (> 0)
};

struct SubdiffQuery {
    Vector point;
    Covector covector;
    SubdiffKind kind;
    double tolerance = 1e-6;
};

using FieldFn = std::function<ExtReal(const Vector&)>;

// Cached evaluations of g on the plan grid around xbar. Membership queries
// against the same (g, xbar, plan) then cost a few flops per direction, which
// is what makes polygon sweeps and large covector samples affordable.
class FieldProbe {
public:
    FieldProbe(const FieldFn& g, Vector xbar, const SamplingPlan& plan);

    MembershipResult frechet(const Covector& xstar, double epsilon) const;
    MembershipResult holder(const Covector& xstar, double s, double sigma_cap) const;

    const Vector& center() const { return xbar_; }
    double value_at_center() const { return g0_; }
    const SamplingPlan& plan() const { return plan_; }
    std::size_t dim() const { return xbar_.dim(); }

private:
    double q_frechet(std::size_t level, std::size_t d, double pd) const;
    Vector point_at(std::size_t level, std::size_t d) const;
    const std::vector<double>& holder_scale(double s) const;

    Vector xbar_;
    SamplingPlan plan_;
    double g0_ = 0.0;
    std::vector<Vector> dirs_;
    std::vector<double> radii_;        // nominal, descending
    std::vector<double> val_over_r_;   // (g(x)-g0)/||x-xbar||, +inf marker
    std::vector<double> ratio_;        // nominal r / realized r
    std::vector<double> rhat_;         // realized ||x-xbar||
    mutable std::map<double, std::vector<double>> holder_cache_;  // s -> rhat^-s
};

// liminf_{x->xbar} (g(x)-g(xbar)-<x*,x-xbar>)/||x-xbar|| >= -epsilon,
// discretized on the plan grid. NonMember needs a persistent violation at the
// two smallest radius levels; Member needs a clean smallest level.
MembershipResult frechet_test(const FieldFn& g, const Vector& xbar, const Covector& xstar,
                              double epsilon, const SamplingPlan& plan);
MembershipResult frechet_test(const ScalarField& g, const Vector& xbar, const Covector& xstar,
                              double epsilon, const SamplingPlan& plan);

// Same with the (1+s)-power quotient. NonMember uses a divergence heuristic:
// a persistent violating direction whose quotient decreases geometrically
// over the last four levels (or breaches -sigma_cap outright).
MembershipResult holder_test(const FieldFn& g, const Vector& xbar, const Covector& xstar,
                             double s, const SamplingPlan& plan, double sigma_cap = 1e6);
MembershipResult holder_test(const ScalarField& g, const Vector& xbar, const Covector& xstar,
                             double s, const SamplingPlan& plan, double sigma_cap = 1e6);

struct NormalConeResult {
    MembershipResult result;
    double margin = 0.0;  // quotient-scale distance from the decision boundary
    bool exact = false;   // decided by the active-cone projection
};

// Membership of xstar in the epsilon-Frechet normal set of Omega at xbar.
// Exact for halfspace intersections (distance from xstar to the cone of
// active row normals, compared against epsilon); point clouds are trivially
// Member (no approaching sequences); V-polytopes are sampled along chords
// into the region.
NormalConeResult normal_cone_contains_ex(const Region& omega, const Vector& xbar,
                                         const Covector& xstar, const SamplingPlan& plan,
                                         double epsilon = 0.0);
MembershipResult normal_cone_contains(const Region& omega, const Vector& xbar,
                                      const Covector& xstar, const SamplingPlan& plan,
                                      double epsilon = 0.0);

// alpha = 2(||x*|| + m)/(m - ell) + 1, the inflation factor; requires
// 0 <= ell < m.
double alpha_factor(double norm_xstar, double m, double ell);

struct RhsBreakdown {
    MembershipResult combined;
    MembershipResult f_side;
    MembershipResult phi_side;
    double margin = 0.0;  // distance from the decision boundary (banding aid)
};

// Formula-side membership oracle at a coincidence point: the conjunction of
// x* in the f-side subdifferential and -x* in the phi-side subdifferential
// at 0. Each query leans on an exact predicate where the structure allows
// (active-cone LP for polyhedral indicators, the polar inequality for
// gauges) and on the sampled falsifier otherwise.
class RhsOracle {
public:
    RhsOracle(const InfConvolution& T, const Vector& xbar, const SamplingPlan& plan,
              double s0_tol = 1e-7);

    RhsBreakdown frechet(const Covector& xstar, double epsilon) const;
    RhsBreakdown holder(const Covector& xstar, double s, double sigma_cap = 1e6) const;

    const Vector& center() const { return xbar_; }

private:
    struct FUnit {
        enum class Kind { ConeExact, CloudTrivial, RegionSampled, Probe } kind;
        std::vector<Vector> chord_dirs;         // RegionSampled (unit, into the region)
        std::vector<double> chord_reach;        // RegionSampled witness reach per direction
        std::shared_ptr<FieldProbe> probe;      // Probe
    };

    void add_funits(const Region& region, const ScalarField& f);
    std::pair<MembershipResult, double> f_side_frechet(const Covector& xstar,
                                                       double epsilon) const;
    std::pair<MembershipResult, double> f_side_holder(const Covector& xstar, double s,
                                                      double sigma_cap) const;
    std::pair<MembershipResult, double> phi_side_frechet(const Covector& xstar,
                                                         double epsilon) const;
    std::pair<MembershipResult, double> phi_side_holder(const Covector& xstar, double s,
                                                        double sigma_cap) const;
    Vector find_support_point(const Covector& c) const;

    Vector xbar_;
    SamplingPlan plan_;
    FieldPtr phi_, f_;
    const Gauge* gauge_ = nullptr;  // kept alive by phi_
    std::vector<FUnit> funits_;
    std::vector<std::vector<Halfspace>> halfspace_rows_;  // per ConeExact unit, in order
    mutable std::shared_ptr<FieldProbe> phi_probe_;
};

MembershipResult rhs_frechet(const InfConvolution& T, const Vector& xbar, const Covector& xstar,
                             double epsilon, const SamplingPlan& plan);
MembershipResult rhs_holder(const InfConvolution& T, const Vector& xbar, const Covector& xstar,
                            double s, const SamplingPlan& plan, double sigma_cap = 1e6);

// Radial profile of a star-shaped membership set in R^2: for `resolution`
// equally spaced angles, bisect (40 iterations) for the largest member radius
// below radius_cap.
std::vector<std::pair<double, double>> boundary_polygon_2d(
    const std::function<bool(const Covector&)>& member, int resolution, double radius_cap);

}  // namespace icv
