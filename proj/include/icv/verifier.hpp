#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "icv/infconv.hpp"
#include "icv/subdiff.hpp"

namespace icv {

// One instance of the standing hypotheses: a body F (phi = gauge of F), a
// target set Omega, an optional perturbation J, and base points that must lie
// in the coincidence set.
class Fixture {
public:
    Fixture(std::string name, ConvexBody F, Region omega, FieldPtr J,
            std::vector<Vector> base_points, std::optional<double> known_ell);

    std::string name;
    std::size_t dimension;
    ConvexBody F;
    Region omega;
    FieldPtr J;  // may be null
    std::vector<Vector> base_points;
    std::optional<double> known_ell;

    Gauge gauge;   // gauge of F
    FieldPtr phi;  // gauge field
    FieldPtr f;    // J + delta_Omega (or the plain indicator)
    InfConvolution T;
};

std::vector<std::string> bundled_fixture_names();
Fixture bundled_fixture(const std::string& name);

enum class CheckVerdict { Pass, Fail, SkippedHypothesis };
const char* check_verdict_name(CheckVerdict v);

struct CheckRecord {
    std::string check_id;
    std::string fixture;
    long trials = 0;
    long members_agree = 0;
    long nonmembers_agree = 0;
    long undetermined = 0;
    long disagreements = 0;
    std::optional<double> worst_gap;
    CheckVerdict verdict = CheckVerdict::Pass;
    std::vector<std::string> counterexamples;  // pre-rendered JSON objects
    std::string reason;                        // "budget", "inconclusive", hypothesis name
    double elapsed_seconds = 0.0;              // never serialized
};

struct VerificationReport {
    std::vector<CheckRecord> records;
    bool all_pass() const;
};

using GaugeEvalFn = std::function<ExtReal(const Vector&)>;

// Membership predicate overrides for fault-injection tests.
struct LhsOverride {
    std::function<MembershipResult(const Vector& xbar, const Covector& xstar, double epsilon)>
        frechet;
    std::function<MembershipResult(const Vector& xbar, const Covector& xstar, double s)> holder;
};

// Gauge axioms on seeded samples: homogeneity, subadditivity, coercivity,
// rho(0) = 0, LP-vs-bisection agreement, polar consistency.
CheckRecord check_gauge_properties(const ConvexBody& F, long trials, std::uint64_t seed);
CheckRecord check_gauge_properties(const ConvexBody& F, long trials, std::uint64_t seed,
                                   const GaugeEvalFn& eval_override, const std::string& tag);

// Inclusion of the sampled T-side subdifferential in the formula side at
// matching epsilon.
CheckRecord check_upper_estimate(const Fixture& fx, double epsilon, long trials,
                                 std::uint64_t seed);

// Pointwise verdict agreement plus (in R^2) radial polygon comparison of the
// two membership sets.
CheckRecord check_frechet_equality(const Fixture& fx, long trials, std::uint64_t seed,
                                   double hausdorff_tol, int polygon_resolution = 720,
                                   const LhsOverride* hooks = nullptr);

CheckRecord check_holder_equality(const Fixture& fx, const std::vector<double>& s_values,
                                  long trials, std::uint64_t seed, double hausdorff_tol,
                                  int polygon_resolution = 720,
                                  const LhsOverride* hooks = nullptr);

// Covectors passing both epsilon-level formula predicates must not be
// rejected by the inflated-epsilon test on T.
CheckRecord check_alpha_inflation(const Fixture& fx, double epsilon, long trials,
                                  std::uint64_t seed);

// Degenerate branches: the {0} body, infeasible-cone +inf paths, empty-region
// errors, and minimal-time unreachability.
CheckRecord check_degenerate_branches(std::uint64_t seed);

struct SuiteConfig {
    std::vector<std::string> fixtures;
    std::uint64_t seed = 42;
    long trials_pointwise = 500;
    long trials_gauge = 10000;
    std::vector<double> epsilons = {0.0, 0.25};
    std::vector<double> s_values = {0.5, 1.0, 2.0};
    double hausdorff_tol = 0.05;
    int polygon_resolution = 720;
    double budget_seconds = 30.0;  // per check; overruns fail with reason "budget"
};

SuiteConfig bundled_config();

VerificationReport run_suite(const SuiteConfig& config);

// One JSON object per line, keys in fixed order, doubles at 17 significant
// digits; byte-identical across runs with the same config and seed.
std::string serialize_record(const CheckRecord& r);
std::string serialize_report(const VerificationReport& rep);

std::string format_double17(double v);

}  // namespace icv
