#include "icv/subdiff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "icv/errors.hpp"
#include "icv/projections.hpp"
#include "icv/rng.hpp"

namespace icv {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kGoldenAngle = 2.3999632297286533222315555066336;
constexpr double kActivityTol = 1e-9;
}  // namespace

int SamplingPlan::directions_for(std::size_t dim) const {
    if (dim == 1) return 2;
    if (directions > 0) return directions;
    if (dim == 2) return 720;
    return 2000;
}

void SamplingPlan::validate() const {
    if (!(base_radius > 0) || !(decay > 0) || !(decay < 1) || levels < 2 ||
        quotient_tolerance < 0)
        throw InputError("SamplingPlan: need base_radius > 0, decay in (0,1), levels >= 2, "
                         "quotient_tolerance >= 0");
}

std::vector<Vector> make_directions(std::size_t dim, int count, std::uint64_t seed) {
    std::vector<Vector> dirs;
    if (dim == 1) {
        dirs.push_back(Vector{1.0});
        dirs.push_back(Vector{-1.0});
        return dirs;
    }
    Rng rng(seed);
    if (dim == 2) {
        const double offset = rng.u01() * kTwoPi / count;
        dirs.reserve(count);
        for (int k = 0; k < count; ++k) {
            const double a = kTwoPi * k / count + offset;
            dirs.push_back(Vector{std::cos(a), std::sin(a)});
        }
        return dirs;
    }
    if (dim == 3) {
        const double offset = rng.u01() * kTwoPi;
        dirs.reserve(count);
        for (int k = 0; k < count; ++k) {
            const double z = 1.0 - 2.0 * (k + 0.5) / count;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double a = k * kGoldenAngle + offset;
            dirs.push_back(Vector{r * std::cos(a), r * std::sin(a), z});
        }
        return dirs;
    }
    dirs.reserve(count);
    for (int k = 0; k < count; ++k) dirs.push_back(rng.unit_vector(dim));
    return dirs;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Member: return "Member";
        case Verdict::NonMember: return "NonMember";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

FieldProbe::FieldProbe(const FieldFn& g, Vector xbar, const SamplingPlan& plan)
    : xbar_(std::move(xbar)), plan_(plan) {
    plan_.validate();
    const ExtReal g0 = g(xbar_);
    if (!g0.finite()) throw InputError("FieldProbe: g(xbar) must be finite");
    g0_ = g0.value();

    dirs_ = make_directions(xbar_.dim(), plan_.directions_for(xbar_.dim()), plan_.seed);
    radii_.resize(plan_.levels);
    double r = plan_.base_radius;
    for (int j = 0; j < plan_.levels; ++j, r *= plan_.decay) radii_[j] = r;

    const std::size_t total = radii_.size() * dirs_.size();
    val_over_r_.assign(total, kInf);
    ratio_.assign(total, 1.0);
    rhat_.assign(total, 0.0);

    for (std::size_t j = 0; j < radii_.size(); ++j) {
        for (std::size_t d = 0; d < dirs_.size(); ++d) {
            const Vector x = xbar_ + radii_[j] * dirs_[d];
            const Vector dx = x - xbar_;
            const double rh = dx.norm2();
            const std::size_t idx = j * dirs_.size() + d;
            if (rh <= 0.0) continue;  // probe collapsed onto the center
            rhat_[idx] = rh;
            const ExtReal gv = g(x);
            if (!gv.finite()) continue;  // +inf never violates
            val_over_r_[idx] = (gv.value() - g0_) / rh;
            ratio_[idx] = radii_[j] / rh;
        }
    }
}

double FieldProbe::q_frechet(std::size_t level, std::size_t d, double pd) const {
    const std::size_t idx = level * dirs_.size() + d;
    const double v = val_over_r_[idx];
    if (v == kInf) return kInf;
    return v - pd * ratio_[idx];
}

Vector FieldProbe::point_at(std::size_t level, std::size_t d) const {
    return xbar_ + radii_[level] * dirs_[d];
}

const std::vector<double>& FieldProbe::holder_scale(double s) const {
    auto it = holder_cache_.find(s);
    if (it != holder_cache_.end()) return it->second;
    std::vector<double> sc(rhat_.size(), 0.0);
    for (std::size_t i = 0; i < rhat_.size(); ++i)
        sc[i] = rhat_[i] > 0 ? std::pow(rhat_[i], -s) : 0.0;
    return holder_cache_.emplace(s, std::move(sc)).first->second;
}

MembershipResult FieldProbe::frechet(const Covector& xstar, double epsilon) const {
    check_same_dim(xstar.dim(), dim(), "FieldProbe::frechet");
    if (epsilon < 0) throw InputError("frechet: epsilon must be >= 0");
    const double thr = -(epsilon + plan_.quotient_tolerance);
    const std::size_t last = radii_.size() - 1;
    const std::size_t prev = radii_.size() - 2;

    MembershipResult res;
    res.worst_quotient = kInf;
    bool clean = true;
    std::size_t wd = dirs_.size();
    double wq = kInf;

    for (std::size_t d = 0; d < dirs_.size(); ++d) {
        const double pd = pairing(xstar, dirs_[d]);
        const double ql = q_frechet(last, d, pd);
        if (ql == kInf) continue;
        res.worst_quotient = std::min(res.worst_quotient, ql);
        if (ql < thr) {
            clean = false;
            const double qp = q_frechet(prev, d, pd);
            if (qp != kInf && qp < thr && ql < wq) {
                wq = ql;
                wd = d;
            }
        }
    }

    if (wd < dirs_.size()) {
        res.verdict = Verdict::NonMember;
        const Vector x = point_at(last, wd);
        const Vector dx = x - xbar_;
        const double rh = dx.norm2();
        const std::size_t idx = last * dirs_.size() + wd;
        res.witness = Witness{x, val_over_r_[idx] - pairing(xstar, dx) / rh};
    } else {
        res.verdict = clean ? Verdict::Member : Verdict::Undetermined;
    }
    return res;
}

MembershipResult FieldProbe::holder(const Covector& xstar, double s, double sigma_cap) const {
    check_same_dim(xstar.dim(), dim(), "FieldProbe::holder");
    if (!(s > 0)) throw InputError("holder: s must be > 0");
    if (!(sigma_cap > 0)) throw InputError("holder: sigma_cap must be > 0");
    if (radii_.size() < 4) throw InputError("holder: plan needs at least 4 levels");

    const auto& scale = holder_scale(s);
    const double qtol = plan_.quotient_tolerance;
    const std::size_t L = radii_.size();

    MembershipResult res;
    res.worst_quotient = kInf;
    bool clean = true;
    std::size_t wd = dirs_.size();
    double wq = kInf;

    for (std::size_t d = 0; d < dirs_.size(); ++d) {
        const double pd = pairing(xstar, dirs_[d]);
        double q4[4];
        bool fin4 = true, viol4 = true;
        for (std::size_t j = 0; j < L; ++j) {
            const double fq = q_frechet(j, d, pd);
            if (fq == kInf) {
                if (j >= L - 4) fin4 = false;
                continue;
            }
            const double qs = fq * scale[j * dirs_.size() + d];
            res.worst_quotient = std::min(res.worst_quotient, qs);
            if (qs < -sigma_cap) clean = false;
            if (j >= L - 4) {
                q4[j - (L - 4)] = qs;
                if (!(fq < -qtol)) viol4 = false;
            }
        }
        if (!fin4) continue;
        // Divergence heuristic: a persistent violating direction whose
        // (1+s)-quotient decreases geometrically over the last four levels,
        // or breaches the hard cap at the two smallest radii.
        bool growing = viol4;
        for (int k = 0; k < 3 && growing; ++k)
            growing = q4[k + 1] < q4[k] && std::abs(q4[k + 1]) >= 1.25 * std::abs(q4[k]);
        const bool hard = q4[3] < -sigma_cap && q4[2] < -sigma_cap;
        if ((growing || hard) && q4[3] < wq) {
            wq = q4[3];
            wd = d;
        }
    }

    if (wd < dirs_.size()) {
        res.verdict = Verdict::NonMember;
        const Vector x = point_at(L - 1, wd);
        const Vector dx = x - xbar_;
        const double rh = dx.norm2();
        const std::size_t idx = (L - 1) * dirs_.size() + wd;
        const double exact_fq = val_over_r_[idx] - pairing(xstar, dx) / rh;
        res.witness = Witness{x, exact_fq * std::pow(rh, -s)};
    } else {
        res.verdict = clean ? Verdict::Member : Verdict::Undetermined;
    }
    return res;
}

MembershipResult frechet_test(const FieldFn& g, const Vector& xbar, const Covector& xstar,
                              double epsilon, const SamplingPlan& plan) {
    return FieldProbe(g, xbar, plan).frechet(xstar, epsilon);
}

MembershipResult frechet_test(const ScalarField& g, const Vector& xbar, const Covector& xstar,
                              double epsilon, const SamplingPlan& plan) {
    return frechet_test([&g](const Vector& x) { return g.eval(x); }, xbar, xstar, epsilon, plan);
}

MembershipResult holder_test(const FieldFn& g, const Vector& xbar, const Covector& xstar, double s,
                             const SamplingPlan& plan, double sigma_cap) {
    return FieldProbe(g, xbar, plan).holder(xstar, s, sigma_cap);
}

MembershipResult holder_test(const ScalarField& g, const Vector& xbar, const Covector& xstar,
                             double s, const SamplingPlan& plan, double sigma_cap) {
    return holder_test([&g](const Vector& x) { return g.eval(x); }, xbar, xstar, s, plan,
                       sigma_cap);
}

namespace {

// Active-cone membership for halfspace regions: the epsilon-Frechet normal
// set is { x* : dist(x*, cone(active rows)) <= epsilon }. The projection
// residual doubles as the witness direction (it lies in the tangent cone).
NormalConeResult cone_exact_test(const std::vector<Halfspace>& rows, const Vector& xbar,
                                 const Covector& xstar, const SamplingPlan& plan,
                                 double epsilon) {
    std::vector<Covector> active;
    for (const auto& h : rows) {
        const double scale = (1.0 + h.normal.norm2()) * (1.0 + xbar.norm2());
        if (std::abs(pairing(h.normal, xbar) - h.offset) <= kActivityTol * scale)
            active.push_back(h.normal);
    }
    const auto cp = geom::project_onto_cone(active, xstar);
    const double thr = epsilon + plan.quotient_tolerance;

    NormalConeResult out;
    out.exact = true;
    out.margin = std::abs(cp.distance - thr);
    out.result.worst_quotient = -cp.distance;
    if (cp.distance <= thr) {
        out.result.verdict = Verdict::Member;
        return out;
    }
    out.result.verdict = Verdict::NonMember;

    // Step along the residual direction, small enough to keep every inactive
    // row satisfied.
    const Vector td = as_vector(cp.residual_direction);
    double step = plan.base_radius * std::pow(plan.decay, plan.levels - 1);
    for (const auto& h : rows) {
        const double slack = h.offset - pairing(h.normal, xbar);
        const double adv = pairing(h.normal, td);
        if (adv > 1e-14 && slack > 0) step = std::min(step, 0.5 * slack / adv);
    }
    out.result.witness = Witness{xbar + step * td, -cp.distance};
    return out;
}

// Chord-sampled test for V-polytope regions: directions from xbar toward
// region points stay inside the region by convexity, so the indicator
// quotient along them is exactly -<x*, d>.
struct ChordSet {
    std::vector<Vector> dirs;
    std::vector<double> reach;
};

ChordSet make_chords(const Region& vpoly, const Vector& xbar, const SamplingPlan& plan) {
    ChordSet cs;
    Rng rng(plan.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<Vector> targets = vpoly.vertices();
    const int want = plan.directions_for(xbar.dim());
    auto extra = vpoly.sample(static_cast<std::size_t>(want), rng);
    targets.insert(targets.end(), extra.begin(), extra.end());
    for (const auto& w : targets) {
        const Vector d = w - xbar;
        const double len = d.norm2();
        if (len <= 1e-12) continue;
        cs.dirs.push_back((1.0 / len) * d);
        cs.reach.push_back(len);
    }
    return cs;
}

NormalConeResult chord_test(const ChordSet& cs, const Vector& xbar, const Covector& xstar,
                            const SamplingPlan& plan, double epsilon) {
    const double thr = epsilon + plan.quotient_tolerance;
    NormalConeResult out;
    out.exact = false;
    double worst = kInf;
    std::size_t wd = cs.dirs.size();
    for (std::size_t i = 0; i < cs.dirs.size(); ++i) {
        const double q = -pairing(xstar, cs.dirs[i]);
        if (q < worst) {
            worst = q;
            wd = i;
        }
    }
    out.result.worst_quotient = worst;
    out.margin = std::abs(worst + thr);
    if (worst >= -thr || wd == cs.dirs.size()) {
        out.result.verdict = Verdict::Member;  // no violation found (one-sided)
        return out;
    }
    out.result.verdict = Verdict::NonMember;
    const double rmin = plan.base_radius * std::pow(plan.decay, plan.levels - 1);
    const double step = std::min(rmin, 0.9 * cs.reach[wd]);
    out.result.witness = Witness{xbar + step * cs.dirs[wd], worst};
    return out;
}

NormalConeResult conjoin(std::vector<NormalConeResult> parts) {
    NormalConeResult out;
    out.exact = true;
    out.margin = kInf;
    out.result.verdict = Verdict::Member;
    out.result.worst_quotient = kInf;
    double worst_violation = 0.0;
    for (auto& p : parts) {
        out.exact = out.exact && p.exact;
        out.result.worst_quotient = std::min(out.result.worst_quotient, p.result.worst_quotient);
        switch (p.result.verdict) {
            case Verdict::Member:
                if (out.result.verdict == Verdict::Member) out.margin = std::min(out.margin, p.margin);
                break;
            case Verdict::Undetermined:
                if (out.result.verdict == Verdict::Member) {
                    out.result.verdict = Verdict::Undetermined;
                    out.margin = 0.0;
                }
                break;
            case Verdict::NonMember:
                if (out.result.verdict != Verdict::NonMember || p.margin > worst_violation) {
                    out.result.verdict = Verdict::NonMember;
                    out.result.witness = p.result.witness;
                    worst_violation = std::max(worst_violation, p.margin);
                    out.margin = worst_violation;
                }
                break;
        }
    }
    return out;
}

NormalConeResult normal_cone_impl(const Region& omega, const Vector& xbar, const Covector& xstar,
                                  const SamplingPlan& plan, double epsilon) {
    switch (omega.kind()) {
        case Region::Kind::Halfspaces:
            return cone_exact_test(omega.rows(), xbar, xstar, plan, epsilon);
        case Region::Kind::PointCloud: {
            // Finite sets admit no sequences x -> xbar, so the liminf is
            // vacuous and every covector is a member.
            NormalConeResult out;
            out.exact = true;
            out.margin = kInf;
            out.result.verdict = Verdict::Member;
            out.result.worst_quotient = kInf;
            return out;
        }
        case Region::Kind::VPolytope: {
            const ChordSet cs = make_chords(omega, xbar, plan);
            return chord_test(cs, xbar, xstar, plan, epsilon);
        }
        case Region::Kind::Union: {
            std::vector<NormalConeResult> parts;
            for (const auto& m : omega.members())
                if (m.contains(xbar, kActivityTol))
                    parts.push_back(normal_cone_impl(m, xbar, xstar, plan, epsilon));
            if (parts.empty()) throw InputError("normal_cone: xbar is not in any union member");
            return conjoin(std::move(parts));
        }
    }
    throw InternalError("normal_cone: unreachable");
}

}  // namespace

NormalConeResult normal_cone_contains_ex(const Region& omega, const Vector& xbar,
                                         const Covector& xstar, const SamplingPlan& plan,
                                         double epsilon) {
    plan.validate();
    check_same_dim(xbar.dim(), omega.dim(), "normal_cone_contains");
    check_same_dim(xstar.dim(), omega.dim(), "normal_cone_contains");
    if (epsilon < 0) throw InputError("normal_cone_contains: epsilon must be >= 0");
    if (!omega.contains(xbar, 1e-9))
        throw InputError("normal_cone_contains: xbar must lie in Omega (tol 1e-9)");
    return normal_cone_impl(omega, xbar, xstar, plan, epsilon);
}

MembershipResult normal_cone_contains(const Region& omega, const Vector& xbar,
                                      const Covector& xstar, const SamplingPlan& plan,
                                      double epsilon) {
    return normal_cone_contains_ex(omega, xbar, xstar, plan, epsilon).result;
}

double alpha_factor(double norm_xstar, double m, double ell) {
    if (!(m > 0)) throw InputError("alpha_factor: m must be > 0");
    if (norm_xstar < 0) throw InputError("alpha_factor: ||x*|| must be >= 0");
    if (!(ell >= 0) || !(ell < m))
        throw InputError("alpha_factor: requires 0 <= ell < m");
    return 2.0 * (norm_xstar + m) / (m - ell) + 1.0;
}

RhsOracle::RhsOracle(const InfConvolution& T, const Vector& xbar, const SamplingPlan& plan,
                     double s0_tol)
    : xbar_(xbar), plan_(plan), phi_(T.phi_ptr()), f_(T.f_ptr()) {
    plan_.validate();
    check_same_dim(xbar_.dim(), T.dim(), "RhsOracle");
    if (!is_in_S0(T, xbar_, s0_tol))
        throw InputError("RhsOracle: xbar is not in S0 (T(xbar) != f(xbar) at tol)");
    gauge_ = phi_->as_gauge();

    const Region* region = f_->indicator_region();
    if (region != nullptr && f_->perturbation() == nullptr) {
        add_funits(*region, *f_);
    } else {
        FUnit u;
        u.kind = FUnit::Kind::Probe;
        const FieldPtr f = f_;
        u.probe = std::make_shared<FieldProbe>(
            [f](const Vector& x) { return f->eval(x); }, xbar_, plan_);
        funits_.push_back(std::move(u));
    }

    if (gauge_ == nullptr) {
        const FieldPtr phi = phi_;
        phi_probe_ = std::make_shared<FieldProbe>(
            [phi](const Vector& x) { return phi->eval(x); }, Vector::zero(xbar_.dim()), plan_);
    }
}

void RhsOracle::add_funits(const Region& region, const ScalarField& f) {
    switch (region.kind()) {
        case Region::Kind::Halfspaces: {
            FUnit u;
            u.kind = FUnit::Kind::ConeExact;
            funits_.push_back(std::move(u));
            halfspace_rows_.push_back(region.rows());
            return;
        }
        case Region::Kind::PointCloud: {
            FUnit u;
            u.kind = FUnit::Kind::CloudTrivial;
            funits_.push_back(std::move(u));
            return;
        }
        case Region::Kind::VPolytope: {
            FUnit u;
            u.kind = FUnit::Kind::RegionSampled;
            const ChordSet cs = make_chords(region, xbar_, plan_);
            u.chord_dirs = cs.dirs;
            u.chord_reach = cs.reach;
            funits_.push_back(std::move(u));
            return;
        }
        case Region::Kind::Union: {
            bool any = false;
            for (const auto& m : region.members()) {
                if (m.contains(xbar_, kActivityTol)) {
                    add_funits(m, f);
                    any = true;
                }
            }
            if (!any) throw InputError("RhsOracle: xbar is not in any union member");
            return;
        }
    }
}

std::pair<MembershipResult, double> RhsOracle::f_side_frechet(const Covector& xstar,
                                                              double epsilon) const {
    std::vector<NormalConeResult> parts;
    std::size_t hs = 0;
    for (const auto& u : funits_) {
        switch (u.kind) {
            case FUnit::Kind::ConeExact:
                parts.push_back(cone_exact_test(halfspace_rows_[hs++], xbar_, xstar, plan_,
                                                epsilon));
                break;
            case FUnit::Kind::CloudTrivial: {
                NormalConeResult r;
                r.exact = true;
                r.margin = kInf;
                r.result.verdict = Verdict::Member;
                r.result.worst_quotient = kInf;
                parts.push_back(r);
                break;
            }
            case FUnit::Kind::RegionSampled: {
                ChordSet cs;
                cs.dirs = u.chord_dirs;
                cs.reach = u.chord_reach;
                parts.push_back(chord_test(cs, xbar_, xstar, plan_, epsilon));
                break;
            }
            case FUnit::Kind::Probe: {
                NormalConeResult r;
                r.exact = false;
                r.result = u.probe->frechet(xstar, epsilon);
                const double thr = epsilon + plan_.quotient_tolerance;
                r.margin = std::isfinite(r.result.worst_quotient)
                               ? std::abs(r.result.worst_quotient + thr)
                               : kInf;
                parts.push_back(r);
                break;
            }
        }
    }
    NormalConeResult all = conjoin(std::move(parts));
    return {all.result, all.margin};
}

std::pair<MembershipResult, double> RhsOracle::f_side_holder(const Covector& xstar, double s,
                                                             double sigma_cap) const {
    // Polyhedral and finite structures have s-independent Holder normal
    // sets equal to the Frechet one; only genuine probes depend on s.
    bool all_structured = true;
    for (const auto& u : funits_)
        if (u.kind == FUnit::Kind::Probe) all_structured = false;
    if (all_structured) return f_side_frechet(xstar, 0.0);

    std::vector<NormalConeResult> parts;
    std::size_t hs = 0;
    for (const auto& u : funits_) {
        switch (u.kind) {
            case FUnit::Kind::ConeExact:
                parts.push_back(cone_exact_test(halfspace_rows_[hs++], xbar_, xstar, plan_, 0.0));
                break;
            case FUnit::Kind::CloudTrivial: {
                NormalConeResult r;
                r.exact = true;
                r.margin = kInf;
                r.result.verdict = Verdict::Member;
                r.result.worst_quotient = kInf;
                parts.push_back(r);
                break;
            }
            case FUnit::Kind::RegionSampled: {
                ChordSet cs;
                cs.dirs = u.chord_dirs;
                cs.reach = u.chord_reach;
                parts.push_back(chord_test(cs, xbar_, xstar, plan_, 0.0));
                break;
            }
            case FUnit::Kind::Probe: {
                NormalConeResult r;
                r.exact = false;
                r.result = u.probe->holder(xstar, s, sigma_cap);
                const MembershipResult fr = u.probe->frechet(xstar, 0.0);
                r.margin = std::isfinite(fr.worst_quotient)
                               ? std::abs(fr.worst_quotient + plan_.quotient_tolerance)
                               : kInf;
                parts.push_back(r);
                break;
            }
        }
    }
    NormalConeResult all = conjoin(std::move(parts));
    return {all.result, all.margin};
}

std::pair<MembershipResult, double> RhsOracle::phi_side_frechet(const Covector& xstar,
                                                                double epsilon) const {
    const Covector neg = -xstar;
    const double qtol = plan_.quotient_tolerance;
    if (gauge_ != nullptr) {
        // Polar tolerance in quotient scale: support slack of qtol*||F||
        // guarantees a violating body point with quotient below -qtol.
        const double scale = std::max(gauge_->body().body_norm(), 1e-12);
        const double ptol = qtol * std::max(1.0, scale);
        const bool polar = gauge_->polar_contains(neg, ptol);
        const double support =
            gauge_->body().is_zero() ? 0.0 : gauge_->body().support(neg);
        const double margin = std::abs(support - (1.0 + ptol)) / scale;
        if (polar || epsilon == 0.0) {
            MembershipResult r;
            r.verdict = polar ? Verdict::Member : Verdict::NonMember;
            r.worst_quotient = (1.0 - support) / scale;
            if (!polar) {
                // Witness: the violating body point scaled near zero.
                Vector u = find_support_point(neg);
                const double rmin = plan_.base_radius * std::pow(plan_.decay, plan_.levels - 1);
                const double len = std::max(u.norm2(), 1e-12);
                const Vector x = (rmin / len) * u;
                const ExtReal gx = gauge_->eval(x);
                const double q = gx.finite()
                                     ? (gx.value() - pairing(neg, x)) / x.norm2()
                                     : kInf;
                r.witness = Witness{x, q};
            }
            return {r, margin};
        }
        // epsilon > 0 and outside the polar set: the epsilon-enlarged set
        // needs the sampled quotient test.
    }
    std::shared_ptr<FieldProbe> probe = phi_probe_;
    if (!probe) {
        const FieldPtr phi = phi_;
        probe = std::make_shared<FieldProbe>([phi](const Vector& x) { return phi->eval(x); },
                                             Vector::zero(xbar_.dim()), plan_);
        phi_probe_ = probe;
    }
    MembershipResult r = probe->frechet(neg, epsilon);
    const double thr = epsilon + qtol;
    const double margin =
        std::isfinite(r.worst_quotient) ? std::abs(r.worst_quotient + thr) : kInf;
    return {r, margin};
}

std::pair<MembershipResult, double> RhsOracle::phi_side_holder(const Covector& xstar, double s,
                                                               double sigma_cap) const {
    // For convex phi (gauges) every s-Holder subdifferential at 0 equals the
    // convex one, so the polar inequality stays the exact test.
    if (gauge_ != nullptr) return phi_side_frechet(xstar, 0.0);
    const Covector neg = -xstar;
    MembershipResult r = phi_probe_->holder(neg, s, sigma_cap);
    const MembershipResult fr = phi_probe_->frechet(neg, 0.0);
    const double margin = std::isfinite(fr.worst_quotient)
                              ? std::abs(fr.worst_quotient + plan_.quotient_tolerance)
                              : kInf;
    return {r, margin};
}

Vector RhsOracle::find_support_point(const Covector& c) const {
    return gauge_->body().support_point(c);
}

namespace {

RhsBreakdown combine_sides(std::pair<MembershipResult, double> f,
                           std::pair<MembershipResult, double> phi) {
    RhsBreakdown out;
    out.f_side = f.first;
    out.phi_side = phi.first;
    const auto fv = f.first.verdict;
    const auto pv = phi.first.verdict;
    if (fv == Verdict::NonMember || pv == Verdict::NonMember) {
        out.combined.verdict = Verdict::NonMember;
        double worst = -kInf;
        if (fv == Verdict::NonMember && f.second > worst) {
            worst = f.second;
            out.combined.witness = f.first.witness;
            out.combined.worst_quotient = f.first.worst_quotient;
        }
        if (pv == Verdict::NonMember && phi.second > worst) {
            worst = phi.second;
            out.combined.witness = phi.first.witness;
            out.combined.worst_quotient = phi.first.worst_quotient;
        }
        out.margin = worst;
    } else if (fv == Verdict::Member && pv == Verdict::Member) {
        out.combined.verdict = Verdict::Member;
        out.combined.worst_quotient = std::min(f.first.worst_quotient, phi.first.worst_quotient);
        out.margin = std::min(f.second, phi.second);
    } else {
        out.combined.verdict = Verdict::Undetermined;
        out.margin = 0.0;
    }
    return out;
}

}  // namespace

RhsBreakdown RhsOracle::frechet(const Covector& xstar, double epsilon) const {
    check_same_dim(xstar.dim(), xbar_.dim(), "RhsOracle::frechet");
    if (epsilon < 0) throw InputError("RhsOracle::frechet: epsilon must be >= 0");
    return combine_sides(f_side_frechet(xstar, epsilon), phi_side_frechet(xstar, epsilon));
}

RhsBreakdown RhsOracle::holder(const Covector& xstar, double s, double sigma_cap) const {
    check_same_dim(xstar.dim(), xbar_.dim(), "RhsOracle::holder");
    if (!(s > 0)) throw InputError("RhsOracle::holder: s must be > 0");
    return combine_sides(f_side_holder(xstar, s, sigma_cap), phi_side_holder(xstar, s, sigma_cap));
}

MembershipResult rhs_frechet(const InfConvolution& T, const Vector& xbar, const Covector& xstar,
                             double epsilon, const SamplingPlan& plan) {
    return RhsOracle(T, xbar, plan).frechet(xstar, epsilon).combined;
}

MembershipResult rhs_holder(const InfConvolution& T, const Vector& xbar, const Covector& xstar,
                            double s, const SamplingPlan& plan, double sigma_cap) {
    return RhsOracle(T, xbar, plan).holder(xstar, s, sigma_cap).combined;
}

std::vector<std::pair<double, double>> boundary_polygon_2d(
    const std::function<bool(const Covector&)>& member, int resolution, double radius_cap) {
    if (resolution < 1) throw InputError("boundary_polygon_2d: resolution must be >= 1");
    if (!(radius_cap > 0)) throw InputError("boundary_polygon_2d: radius_cap must be > 0");

    std::vector<std::pair<double, double>> out;
    out.reserve(resolution);
    for (int k = 0; k < resolution; ++k) {
        const double angle = kTwoPi * k / resolution;
        const double cx = std::cos(angle), sy = std::sin(angle);
        auto probe = [&](double r) { return member(Covector{r * cx, r * sy}); };
        double radius = 0.0;
        if (probe(radius_cap)) {
            radius = radius_cap;
        } else {
            double lo = 0.0, hi = radius_cap;
            for (int it = 0; it < 40; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (probe(mid))
                    lo = mid;
                else
                    hi = mid;
            }
            radius = lo;
        }
        out.emplace_back(angle, radius);
    }
    return out;
}

}  // namespace icv
