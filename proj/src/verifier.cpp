#include "icv/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "icv/errors.hpp"
#include "icv/rng.hpp"

namespace icv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kUndeterminedCap = 0.05;  // per-check inconclusive budget

std::uint64_t fnv_mix(std::uint64_t base, const std::string& s) {
    std::uint64_t h = 1469598103934665603ull ^ base;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string label_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string json_num(double v) {
    if (std::isfinite(v)) return format_double17(v);
    return v > 0 ? "\"inf\"" : "\"-inf\"";
}

std::string json_vec(const std::vector<double>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += json_num(c[i]);
    }
    return s + "]";
}

// Compact counterexample payloads, rendered immediately so the record is a
// plain value.
std::string ce_pointwise(const Covector& c, const char* lhs, const char* rhs, double param,
                         const std::optional<Witness>& w) {
    std::string s = "{\"covector\":" + json_vec(c.coords()) + ",\"lhs\":\"" + lhs +
                    "\",\"rhs\":\"" + rhs + "\",\"param\":" + json_num(param);
    if (w) {
        s += ",\"witness\":" + json_vec(w->x.coords()) + ",\"quotient\":" + json_num(w->quotient);
    }
    return s + "}";
}

std::string ce_note(const std::string& what, const std::string& detail) {
    return "{\"what\":\"" + what + "\",\"detail\":\"" + detail + "\"}";
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

double hairline_guard(const Covector& c, std::size_t dim, const SamplingPlan& plan) {
    const double qt = 4.0 * plan.quotient_tolerance;
    if (dim == 1) return qt;
    return c.norm2() * (kTwoPi / plan.directions_for(dim)) + qt;
}

double lhs_margin(const MembershipResult& r, double thr) {
    if (!std::isfinite(r.worst_quotient)) return kInf;
    return std::abs(r.worst_quotient + thr);
}

SamplingPlan plan_for(std::uint64_t seed) {
    SamplingPlan p;
    p.seed = seed;
    return p;
}

FieldFn field_of(const InfConvolution& T) {
    return [&T](const Vector& x) { return T.eval(x, 0.0).value; };
}

// Gate for the equality theorems: the calm constant (given or estimated)
// must stay below the coercivity constant.
std::optional<double> effective_ell(const Fixture& fx, std::uint64_t seed) {
    if (fx.known_ell) return fx.known_ell;
    double ell = 0.0;
    bool any = false;
    for (const auto& bp : fx.base_points) {
        const auto est = calm_constant(*fx.f, bp, 2000, seed, 1e6);
        ell = std::max(ell, est.ell);
        any = true;
    }
    if (!any) return std::nullopt;
    return ell;
}

Covector sample_covector(Rng& rng, std::size_t dim, double max_radius) {
    const double r = rng.uniform(0.0, max_radius);
    Vector u = rng.unit_vector(dim);
    std::vector<double> c(dim);
    for (std::size_t i = 0; i < dim; ++i) c[i] = r * u[i];
    return Covector(std::move(c));
}

}  // namespace

const char* check_verdict_name(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::Pass: return "pass";
        case CheckVerdict::Fail: return "fail";
        case CheckVerdict::SkippedHypothesis: return "skipped-hypothesis";
    }
    return "?";
}

bool VerificationReport::all_pass() const {
    for (const auto& r : records)
        if (r.verdict == CheckVerdict::Fail) return false;
    return true;
}

std::string format_double17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CheckRecord check_gauge_properties(const ConvexBody& F, long trials, std::uint64_t seed) {
    Gauge g(F);
    return check_gauge_properties(F, trials, seed,
                                  [g](const Vector& x) { return g.eval(x); }, "");
}

CheckRecord check_gauge_properties(const ConvexBody& F, long trials, std::uint64_t seed,
                                   const GaugeEvalFn& eval, const std::string& tag) {
    if (trials < 1) throw InputError("check_gauge_properties: trials must be >= 1");
    Stopwatch sw;
    CheckRecord rec;
    rec.check_id = tag.empty() ? "gauge_properties" : ("gauge_properties_" + tag);
    rec.fixture = "-";

    Gauge g(F);
    const double m = g.coercivity_constant();
    const std::size_t n = F.dim();
    Rng rng(seed);
    const auto vset = F.as_vertex_set();

    auto sample_point = [&]() -> Vector {
        if (vset && rng.u01() < 0.5) {
            // Point of cone(F): guaranteed-finite gauge.
            const auto w = rng.simplex_weights(vset->size());
            Vector p = Vector::zero(n);
            for (std::size_t j = 0; j < vset->size(); ++j) p = p + w[j] * (*vset)[j];
            return rng.uniform(0.0, 2.5) * p;
        }
        Vector p = Vector::zero(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = rng.uniform(-3.0, 3.0);
        return p;
    };
    auto fail = [&](const std::string& what, const std::string& detail) {
        ++rec.disagreements;
        if (rec.counterexamples.size() < 8) rec.counterexamples.push_back(ce_note(what, detail));
    };

    // rho(0) = 0.
    ++rec.trials;
    const ExtReal at0 = eval(Vector::zero(n));
    if (!at0.finite() || std::abs(at0.value()) > 1e-12)
        fail("rho0", "gauge at origin is " + at0.str());

    for (long i = 0; i < trials; ++i) {
        ++rec.trials;
        const Vector x = sample_point();
        const Vector y = sample_point();
        const double lam = rng.uniform(0.1, 4.0);
        const ExtReal gx = eval(x);
        const ExtReal gy = eval(y);

        // Positive homogeneity.
        const ExtReal glx = eval(lam * x);
        if (gx.finite() != glx.finite()) {
            fail("homogeneity_domain", "x=" + x.str() + " lambda=" + format_double17(lam));
        } else if (gx.finite()) {
            const double want = lam * gx.value();
            if (std::abs(glx.value() - want) > 1e-9 * std::max(1.0, std::abs(want)))
                fail("homogeneity", "x=" + x.str() + " lambda=" + format_double17(lam));
        }

        // Subadditivity.
        if (gx.finite() && gy.finite()) {
            const ExtReal gxy = eval(x + y);
            if (!(gxy.raw() <= gx.value() + gy.value() + 1e-9))
                fail("subadditivity", "x=" + x.str() + " y=" + y.str());
        }

        // Coercivity.
        if (gx.finite() && !(m * x.norm2() <= gx.value() + 1e-9))
            fail("coercivity", "x=" + x.str());

        ++rec.members_agree;
    }

    // LP vs bisection oracle, on a subsample.
    const long bis_trials = std::min<long>(trials, 500);
    for (long i = 0; i < bis_trials; ++i) {
        ++rec.trials;
        const Vector x = sample_point();
        const ExtReal lp = eval(x);
        const ExtReal bis = g.eval_bisection(x, 1e-8);
        if (lp.finite() != bis.finite()) {
            fail("oracle_domain", "x=" + x.str() + " lp=" + lp.str() + " bis=" + bis.str());
        } else if (lp.finite() && std::abs(lp.value() - bis.value()) > 1e-7) {
            fail("oracle_agreement", "x=" + x.str() + " lp=" + lp.str() + " bis=" + bis.str());
        } else {
            ++rec.members_agree;
        }
    }

    // Polar predicate vs the subgradient inequality at 0.
    std::vector<Vector> finite_pts;
    for (long i = 0; i < 50; ++i) {
        const Vector x = sample_point();
        if (eval(x).finite()) finite_pts.push_back(x);
    }
    for (long i = 0; i < 500; ++i) {
        ++rec.trials;
        Covector u = as_covector(rng.unit_vector(n));
        const double su = F.support(u);
        if (su <= 1e-9) continue;  // degenerate direction for this body
        const double t = rng.uniform(0.0, 2.0) / su;
        const Covector c = t * u;
        const double support = F.support(c);
        if (std::abs(support - 1.0) <= 1e-4) continue;  // borderline band excluded
        const bool polar = g.polar_contains(c, 0.0);
        if (polar) {
            bool ok = true;
            for (const auto& x : finite_pts) {
                const ExtReal gx = eval(x);
                if (gx.finite() && pairing(c, x) > gx.value() + 1e-7) ok = false;
            }
            if (!ok) {
                fail("polar_member_inequality", "c=" + c.str());
                continue;
            }
        } else {
            // A violating point must exist; the support maximizer provides it.
            const Vector u_max = F.support_point(c);
            const ExtReal gu = eval(u_max);
            if (!(gu.finite() && pairing(c, u_max) > gu.value() + 1e-7)) {
                fail("polar_nonmember_witness", "c=" + c.str());
                continue;
            }
        }
        ++rec.members_agree;
    }

    rec.verdict = rec.disagreements == 0 ? CheckVerdict::Pass : CheckVerdict::Fail;
    rec.elapsed_seconds = sw.seconds();
    return rec;
}

CheckRecord check_upper_estimate(const Fixture& fx, double epsilon, long trials,
                                 std::uint64_t seed) {
    Stopwatch sw;
    CheckRecord rec;
    rec.check_id = "upper_estimate_eps" + label_double(epsilon);
    rec.fixture = fx.name;
    const SamplingPlan plan = plan_for(seed);
    const double thr = epsilon + plan.quotient_tolerance;

    for (const auto& bp : fx.base_points) {
        FieldProbe probe(field_of(fx.T), bp, plan);
        RhsOracle oracle(fx.T, bp, plan);
        Rng rng(fnv_mix(seed, fx.name + "/ue/" + bp.str()));

        for (long i = 0; i < trials; ++i) {
            ++rec.trials;
            const Covector c = sample_covector(rng, fx.dimension, 2.0);
            const MembershipResult lhs = probe.frechet(c, epsilon);
            if (lhs.verdict != Verdict::Member) {
                // The inclusion constrains only T-side members.
                if (lhs.verdict == Verdict::Undetermined)
                    ++rec.undetermined;
                else
                    ++rec.nonmembers_agree;
                continue;
            }
            const RhsBreakdown rhs = oracle.frechet(c, epsilon);
            if (rhs.combined.verdict == Verdict::NonMember) {
                const double guard = hairline_guard(c, fx.dimension, plan);
                if (std::min(rhs.margin, lhs_margin(lhs, thr)) <= guard) {
                    ++rec.undetermined;  // boundary hairline, not evidence
                } else {
                    ++rec.disagreements;
                    if (rec.counterexamples.size() < 8)
                        rec.counterexamples.push_back(ce_pointwise(
                            c, "Member", "NonMember", epsilon, rhs.combined.witness));
                }
            } else if (rhs.combined.verdict == Verdict::Undetermined) {
                ++rec.undetermined;
            } else {
                ++rec.members_agree;
            }
        }
    }

    if (rec.disagreements > 0) {
        rec.verdict = CheckVerdict::Fail;
    } else if (rec.trials > 0 &&
               rec.undetermined > kUndeterminedCap * static_cast<double>(rec.trials)) {
        rec.verdict = CheckVerdict::Fail;
        rec.reason = "inconclusive";
    }
    rec.elapsed_seconds = sw.seconds();
    return rec;
}

namespace {

struct EqualityTally {
    CheckRecord* rec;
    const SamplingPlan* plan;
    std::size_t dim;

    void compare(const Covector& c, const MembershipResult& lhs, const RhsBreakdown& rhs,
                 double thr, double param) {
        ++rec->trials;
        if (lhs.verdict == Verdict::Undetermined ||
            rhs.combined.verdict == Verdict::Undetermined) {
            ++rec->undetermined;
            return;
        }
        if (lhs.verdict == rhs.combined.verdict) {
            if (lhs.verdict == Verdict::Member)
                ++rec->members_agree;
            else
                ++rec->nonmembers_agree;
            return;
        }
        const double guard = hairline_guard(c, dim, *plan);
        if (std::min(rhs.margin, lhs_margin(lhs, thr)) <= guard) {
            ++rec->undetermined;  // decision-boundary hairline
            return;
        }
        ++rec->disagreements;
        if (rec->counterexamples.size() < 8) {
            const auto& w = lhs.verdict == Verdict::NonMember ? lhs.witness
                                                              : rhs.combined.witness;
            rec->counterexamples.push_back(ce_pointwise(c, verdict_name(lhs.verdict),
                                                        verdict_name(rhs.combined.verdict),
                                                        param, w));
        }
    }

    void finish() {
        if (rec->disagreements > 0) {
            rec->verdict = CheckVerdict::Fail;
        } else if (rec->trials > 0 &&
                   rec->undetermined > kUndeterminedCap * static_cast<double>(rec->trials)) {
            rec->verdict = CheckVerdict::Fail;
            rec->reason = "inconclusive";
        }
    }
};

void polygon_gap(CheckRecord& rec, const std::function<bool(const Covector&)>& lhs,
                 const std::function<bool(const Covector&)>& rhs, int resolution,
                 double hausdorff_tol, const std::string& label) {
    const double cap = 2.0;
    const auto pl = boundary_polygon_2d(lhs, resolution, cap);
    const auto pr = boundary_polygon_2d(rhs, resolution, cap);
    double gap = 0.0;
    std::size_t worst_k = 0;
    for (std::size_t k = 0; k < pl.size(); ++k) {
        const double d = std::abs(pl[k].second - pr[k].second);
        if (d > gap) {
            gap = d;
            worst_k = k;
        }
    }
    if (!rec.worst_gap || gap > *rec.worst_gap) rec.worst_gap = gap;
    if (gap > hausdorff_tol) {
        rec.verdict = CheckVerdict::Fail;
        ++rec.disagreements;
        if (rec.counterexamples.size() < 8)
            rec.counterexamples.push_back(
                ce_note("polygon_gap_" + label,
                        "angle=" + format_double17(pl[worst_k].first) +
                            " lhs_r=" + format_double17(pl[worst_k].second) +
                            " rhs_r=" + format_double17(pr[worst_k].second)));
    }
}

}  // namespace

CheckRecord check_frechet_equality(const Fixture& fx, long trials, std::uint64_t seed,
                                   double hausdorff_tol, int polygon_resolution,
                                   const LhsOverride* hooks) {
    Stopwatch sw;
    CheckRecord rec;
    rec.check_id = "frechet_equality";
    rec.fixture = fx.name;
    const SamplingPlan plan = plan_for(seed);

    const double m = fx.gauge.coercivity_constant();
    const auto ell = effective_ell(fx, seed);
    if (!ell || !(*ell < m)) {
        rec.verdict = CheckVerdict::SkippedHypothesis;
        rec.reason = "ell >= m (center-Lipschitz hypothesis violated)";
        rec.elapsed_seconds = sw.seconds();
        return rec;
    }

    EqualityTally tally{&rec, &plan, fx.dimension};
    const double thr = plan.quotient_tolerance;

    for (const auto& bp : fx.base_points) {
        FieldProbe probe(field_of(fx.T), bp, plan);
        RhsOracle oracle(fx.T, bp, plan);
        auto lhs_of = [&](const Covector& c) {
            return hooks && hooks->frechet ? hooks->frechet(bp, c, 0.0) : probe.frechet(c, 0.0);
        };
        Rng rng(fnv_mix(seed, fx.name + "/fe/" + bp.str()));

        for (long i = 0; i < trials; ++i) {
            const Covector c = sample_covector(rng, fx.dimension, 2.0);
            tally.compare(c, lhs_of(c), oracle.frechet(c, 0.0), thr, 0.0);
        }

        if (fx.dimension == 2) {
            polygon_gap(
                rec, [&](const Covector& c) { return lhs_of(c).verdict == Verdict::Member; },
                [&](const Covector& c) {
                    return oracle.frechet(c, 0.0).combined.verdict == Verdict::Member;
                },
                polygon_resolution, hausdorff_tol, "bp=" + bp.str());
        }
    }

    tally.finish();
    rec.elapsed_seconds = sw.seconds();
    return rec;
}

CheckRecord check_holder_equality(const Fixture& fx, const std::vector<double>& s_values,
                                  long trials, std::uint64_t seed, double hausdorff_tol,
                                  int polygon_resolution, const LhsOverride* hooks) {
    Stopwatch sw;
    CheckRecord rec;
    rec.check_id = "holder_equality";
    rec.fixture = fx.name;
    const SamplingPlan plan = plan_for(seed);
    const double sigma_cap = 1e6;

    const double m = fx.gauge.coercivity_constant();
    const auto ell = effective_ell(fx, seed);
    if (!ell || !(*ell < m)) {
        rec.verdict = CheckVerdict::SkippedHypothesis;
        rec.reason = "ell >= m (center-Lipschitz hypothesis violated)";
        rec.elapsed_seconds = sw.seconds();
        return rec;
    }

    EqualityTally tally{&rec, &plan, fx.dimension};
    const double thr = plan.quotient_tolerance;
    long cross_s = 0;

    for (const auto& bp : fx.base_points) {
        FieldProbe probe(field_of(fx.T), bp, plan);
        RhsOracle oracle(fx.T, bp, plan);
        auto lhs_of = [&](const Covector& c, double s) {
            return hooks && hooks->holder ? hooks->holder(bp, c, s)
                                          : probe.holder(c, s, sigma_cap);
        };
        Rng rng(fnv_mix(seed, fx.name + "/he/" + bp.str()));

        for (long i = 0; i < trials; ++i) {
            const Covector c = sample_covector(rng, fx.dimension, 2.0);
            std::vector<Verdict> decided;
            bool all_decided = true;
            for (double s : s_values) {
                const MembershipResult lhs = lhs_of(c, s);
                const RhsBreakdown rhs = oracle.holder(c, s, sigma_cap);
                tally.compare(c, lhs, rhs, thr, s);
                if (lhs.verdict == Verdict::Undetermined)
                    all_decided = false;
                else
                    decided.push_back(lhs.verdict);
            }
            // On polyhedral/finite data all Holder sets coincide; decided
            // verdicts must match across s.
            if (all_decided && decided.size() == s_values.size()) {
                for (std::size_t k = 1; k < decided.size(); ++k) {
                    if (decided[k] != decided[0]) {
                        ++cross_s;
                        if (rec.counterexamples.size() < 8)
                            rec.counterexamples.push_back(
                                ce_note("cross_s_disagreement", "covector=" + c.str()));
                        break;
                    }
                }
            }
        }

        if (fx.dimension == 2) {
            for (double s : s_values) {
                polygon_gap(
                    rec,
                    [&](const Covector& c) { return lhs_of(c, s).verdict == Verdict::Member; },
                    [&](const Covector& c) {
                        return oracle.holder(c, s, sigma_cap).combined.verdict == Verdict::Member;
                    },
                    polygon_resolution, hausdorff_tol,
                    "s=" + label_double(s) + " bp=" + bp.str());
            }
        }
    }

    if (cross_s > 0) {
        rec.disagreements += cross_s;
        rec.verdict = CheckVerdict::Fail;
    }
    tally.finish();
    rec.elapsed_seconds = sw.seconds();
    return rec;
}

CheckRecord check_alpha_inflation(const Fixture& fx, double epsilon, long trials,
                                  std::uint64_t seed) {
    Stopwatch sw;
    CheckRecord rec;
    rec.check_id = "alpha_inflation_eps" + label_double(epsilon);
    rec.fixture = fx.name;
    const SamplingPlan plan = plan_for(seed);

    const double m = fx.gauge.coercivity_constant();
    const auto ell = effective_ell(fx, seed);
    if (!ell || !(*ell < m)) {
        rec.verdict = CheckVerdict::SkippedHypothesis;
        rec.reason = "ell >= m (center-Lipschitz hypothesis violated)";
        rec.elapsed_seconds = sw.seconds();
        return rec;
    }

    for (const auto& bp : fx.base_points) {
        FieldProbe probe(field_of(fx.T), bp, plan);
        RhsOracle oracle(fx.T, bp, plan);
        Rng rng(fnv_mix(seed, fx.name + "/ai/" + bp.str()));

        for (long i = 0; i < trials; ++i) {
            ++rec.trials;
            const Covector c = sample_covector(rng, fx.dimension, m + 2.0 * epsilon + 0.5);
            const RhsBreakdown rhs = oracle.frechet(c, epsilon);
            if (rhs.combined.verdict != Verdict::Member) {
                ++rec.nonmembers_agree;  // out of scope for the inflation claim
                continue;
            }
            if (rhs.margin <= hairline_guard(c, fx.dimension, plan)) {
                ++rec.undetermined;
                continue;
            }
            const double alpha = alpha_factor(c.norm2(), m, *ell);
            const MembershipResult lhs = probe.frechet(c, alpha * epsilon);
            if (lhs.verdict == Verdict::NonMember) {
                ++rec.disagreements;
                if (rec.counterexamples.size() < 8)
                    rec.counterexamples.push_back(
                        ce_pointwise(c, "NonMember", "Member", epsilon, lhs.witness));
            } else {
                ++rec.members_agree;
            }
        }
    }

    rec.verdict = rec.disagreements == 0 ? CheckVerdict::Pass : CheckVerdict::Fail;
    rec.elapsed_seconds = sw.seconds();
    return rec;
}

CheckRecord check_degenerate_branches(std::uint64_t seed) {
    Stopwatch sw;
    CheckRecord rec;
    rec.check_id = "degenerate_branches";
    rec.fixture = "-";

    auto expect = [&](bool ok, const std::string& what, const std::string& detail) {
        ++rec.trials;
        if (ok) {
            ++rec.members_agree;
        } else {
            ++rec.disagreements;
            if (rec.counterexamples.size() < 8)
                rec.counterexamples.push_back(ce_note(what, detail));
        }
    };

    // Gauge of the zero body: indicator of {0}, configurable coercivity.
    {
        Gauge g(ConvexBody::singleton(Vector{0.0, 0.0}), 7.0);
        expect(g.eval(Vector{0.0, 0.0}) == ExtReal(0.0), "zero_body_at_origin", "");
        expect(g.eval(Vector{1.0, 0.0}).infinite(), "zero_body_offsite", "");
        expect(g.eval_bisection(Vector{1.0, 0.0}, 1e-8).infinite(), "zero_body_bisection", "");
        expect(g.coercivity_constant() == 7.0, "zero_body_coercivity", "");
    }

    // Infeasible-cone +inf paths agree between the LP and the oracle.
    {
        Gauge g(ConvexBody::vpolytope({Vector{1.0, 0.0}, Vector{0.0, 1.0}}));
        expect(g.eval(Vector{-1.0, 0.0}).infinite(), "cone_infeasible_lp", "");
        expect(g.eval_bisection(Vector{-1.0, 0.0}, 1e-8).infinite(), "cone_infeasible_bis", "");
        const ExtReal v = g.eval(Vector{2.0, 2.0});
        expect(v.finite() && std::abs(v.value() - 4.0) < 1e-9, "segment_gauge_value",
               v.str());
    }

    // Empty halfspace region surfaces a domain-empty error from sampling.
    {
        auto empty = Region::halfspaces({Halfspace{Covector{1.0, 0.0}, -1.0},
                                         Halfspace{Covector{-1.0, 0.0}, 0.0}});
        bool raised = false;
        try {
            domain_sample(*indicator(empty), 3, seed);
        } catch (const DomainEmptyError&) {
            raised = true;
        }
        expect(raised, "empty_region_error", "DomainEmptyError not raised");
    }

    // Minimal time with a singleton velocity: reachable and unreachable rays.
    {
        const auto F = ConvexBody::singleton(Vector{1.0, 0.0});
        const auto omega = Region::point_cloud({Vector{2.0, 0.0}});
        const auto fwd = minimal_time(F, omega, Vector{0.0, 0.0});
        expect(fwd.value.finite() && std::abs(fwd.value.value() - 2.0) < 1e-9,
               "singleton_reachable", fwd.value.str());
        const auto bwd = minimal_time(F, omega, Vector{3.0, 0.0});
        expect(bwd.value.infinite(), "singleton_unreachable", bwd.value.str());
    }

    // The ell >= m instance gates to skipped-hypothesis rather than failing.
    {
        const Fixture gate = bundled_fixture("perturbed_l2_m1");
        const CheckRecord r = check_frechet_equality(gate, 16, seed, 0.05, 90);
        expect(r.verdict == CheckVerdict::SkippedHypothesis, "ell_ge_m_gate",
               check_verdict_name(r.verdict));
    }

    rec.verdict = rec.disagreements == 0 ? CheckVerdict::Pass : CheckVerdict::Fail;
    rec.elapsed_seconds = sw.seconds();
    return rec;
}

SuiteConfig bundled_config() {
    SuiteConfig cfg;
    cfg.fixtures = bundled_fixture_names();
    return cfg;
}

VerificationReport run_suite(const SuiteConfig& config) {
    if (config.fixtures.empty()) throw InputError("run_suite: fixture list is empty");
    if (config.trials_pointwise < 1 || config.trials_gauge < 1)
        throw InputError("run_suite: trial budgets must be >= 1");

    VerificationReport rep;
    auto push = [&](CheckRecord r) {
        if (r.elapsed_seconds > config.budget_seconds) {
            r.verdict = CheckVerdict::Fail;
            r.reason = "budget";
        }
        rep.records.push_back(std::move(r));
    };

    push(check_degenerate_branches(config.seed));

    for (const auto& name : config.fixtures) {
        Fixture fx = bundled_fixture(name);  // throws InputError for unknown names
        const std::uint64_t fseed = fnv_mix(config.seed, name);

        push(check_gauge_properties(fx.F, config.trials_gauge, fseed));
        for (double eps : config.epsilons)
            push(check_upper_estimate(fx, eps, config.trials_pointwise, fseed));
        push(check_frechet_equality(fx, config.trials_pointwise, fseed, config.hausdorff_tol,
                                    config.polygon_resolution));
        push(check_holder_equality(fx, config.s_values, config.trials_pointwise, fseed,
                                   config.hausdorff_tol, config.polygon_resolution));
        if (name == "perturbed_l03_m1")
            push(check_alpha_inflation(fx, 0.1, 200, fseed));
    }
    return rep;
}

std::string serialize_record(const CheckRecord& r) {
    std::string s = "{\"check_id\":\"" + r.check_id + "\",\"fixture\":\"" + r.fixture +
                    "\",\"verdict\":\"" + check_verdict_name(r.verdict) +
                    "\",\"trials\":" + std::to_string(r.trials) +
                    ",\"disagreements\":" + std::to_string(r.disagreements) +
                    ",\"undetermined\":" + std::to_string(r.undetermined) + ",\"worst_gap\":";
    s += r.worst_gap ? json_num(*r.worst_gap) : "null";
    s += ",\"counterexamples\":[";
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
        if (i) s += ",";
        s += r.counterexamples[i];
    }
    s += "]";
    if (!r.reason.empty()) s += ",\"reason\":\"" + r.reason + "\"";
    s += "}";
    return s;
}

std::string serialize_report(const VerificationReport& rep) {
    std::string s;
    for (const auto& r : rep.records) {
        s += serialize_record(r);
        s += "\n";
    }
    return s;
}

}  // namespace icv
