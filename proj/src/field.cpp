#include "icv/field.hpp"

#include <algorithm>
#include <cmath>

#include "icv/errors.hpp"

namespace icv {

namespace {

constexpr double kRegionTol = 1e-9;   // polytope/halfspace membership
constexpr double kTableTol = 1e-12;   // per-coordinate key matching

class IndicatorField final : public ScalarField {
public:
    explicit IndicatorField(Region r) : region_(std::move(r)) {}
    ExtReal eval(const Vector& x) const override {
        return region_.contains(x, kRegionTol) ? ExtReal(0.0) : ExtReal::infinity();
    }
    std::size_t dim() const override { return region_.dim(); }
    std::optional<std::vector<Vector>> finite_support() const override {
        if (region_.kind() == Region::Kind::PointCloud) return region_.points();
        if (region_.kind() == Region::Kind::Union) {
            std::vector<Vector> all;
            for (const auto& m : region_.members()) {
                if (m.kind() != Region::Kind::PointCloud) return std::nullopt;
                for (const auto& p : m.points()) all.push_back(p);
            }
            return all;
        }
        return std::nullopt;
    }
    const Region* indicator_region() const override { return &region_; }

private:
    Region region_;
};

class TableField final : public ScalarField {
public:
    explicit TableField(std::vector<std::pair<Vector, double>> entries)
        : entries_(std::move(entries)) {
        if (entries_.empty()) throw InputError("table field: needs at least one entry");
        const std::size_t n = entries_[0].first.dim();
        for (const auto& [p, v] : entries_) {
            check_same_dim(p.dim(), n, "table field");
            if (!std::isfinite(v)) throw InputError("table field: values must be finite");
        }
    }
    ExtReal eval(const Vector& x) const override {
        check_same_dim(x.dim(), dim(), "table field eval");
        for (const auto& [p, v] : entries_) {
            bool match = true;
            for (std::size_t i = 0; i < x.dim() && match; ++i)
                match = std::abs(x[i] - p[i]) <= kTableTol;
            if (match) return v;
        }
        return ExtReal::infinity();
    }
    std::size_t dim() const override { return entries_[0].first.dim(); }
    std::optional<std::vector<Vector>> finite_support() const override {
        std::vector<Vector> keys;
        keys.reserve(entries_.size());
        for (const auto& [p, v] : entries_) keys.push_back(p);
        return keys;
    }

private:
    std::vector<std::pair<Vector, double>> entries_;
};

class PerturbedField final : public ScalarField {
public:
    PerturbedField(FieldPtr J, Region region) : j_(std::move(J)), region_(std::move(region)) {
        if (!j_) throw InputError("perturbed field: J must be set");
        check_same_dim(j_->dim(), region_.dim(), "perturbed field");
    }
    ExtReal eval(const Vector& x) const override {
        if (!region_.contains(x, kRegionTol)) return ExtReal::infinity();
        return j_->eval(x);
    }
    std::size_t dim() const override { return region_.dim(); }
    std::optional<std::vector<Vector>> finite_support() const override {
        // Prefer the more restrictive finite set, filtered through eval later.
        if (auto s = j_->finite_support()) return s;
        if (region_.kind() == Region::Kind::PointCloud) return region_.points();
        return std::nullopt;
    }
    const Region* indicator_region() const override { return &region_; }
    const ScalarField* perturbation() const override { return j_->is_zero() ? nullptr : j_.get(); }

private:
    FieldPtr j_;
    Region region_;
};

class ZeroField final : public ScalarField {
public:
    explicit ZeroField(std::size_t n) : n_(n) {}
    ExtReal eval(const Vector& x) const override {
        check_same_dim(x.dim(), n_, "zero field eval");
        return 0.0;
    }
    std::size_t dim() const override { return n_; }
    bool is_zero() const override { return true; }

private:
    std::size_t n_;
};

class GaugeFieldImpl final : public ScalarField {
public:
    explicit GaugeFieldImpl(Gauge g) : g_(std::move(g)) {}
    ExtReal eval(const Vector& x) const override { return g_.eval(x); }
    std::size_t dim() const override { return g_.dim(); }
    const Gauge* as_gauge() const override { return &g_; }

private:
    Gauge g_;
};

class SumField final : public ScalarField {
public:
    explicit SumField(std::vector<FieldPtr> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw InputError("sum field: needs at least one term");
        for (const auto& t : terms_)
            check_same_dim(t->dim(), terms_[0]->dim(), "sum field");
    }
    ExtReal eval(const Vector& x) const override {
        ExtReal s = 0.0;
        for (const auto& t : terms_) {
            s += t->eval(x);
            if (s.infinite()) return s;
        }
        return s;
    }
    std::size_t dim() const override { return terms_[0]->dim(); }
    std::optional<std::vector<Vector>> finite_support() const override {
        for (const auto& t : terms_)
            if (auto s = t->finite_support()) return s;
        return std::nullopt;
    }

private:
    std::vector<FieldPtr> terms_;
};

class ShiftedField final : public ScalarField {
public:
    ShiftedField(FieldPtr f, Vector anchor) : f_(std::move(f)), anchor_(std::move(anchor)) {
        check_same_dim(f_->dim(), anchor_.dim(), "shifted field");
    }
    ExtReal eval(const Vector& y) const override { return f_->eval(y - anchor_); }
    std::size_t dim() const override { return anchor_.dim(); }
    std::optional<std::vector<Vector>> finite_support() const override {
        if (auto s = f_->finite_support()) {
            for (auto& p : *s) p = p + anchor_;
            return s;
        }
        return std::nullopt;
    }

private:
    FieldPtr f_;
    Vector anchor_;
};

}  // namespace

FieldPtr indicator(Region region) { return std::make_shared<IndicatorField>(std::move(region)); }
FieldPtr table_field(std::vector<std::pair<Vector, double>> entries) {
    return std::make_shared<TableField>(std::move(entries));
}
FieldPtr perturbed(FieldPtr J, Region region) {
    return std::make_shared<PerturbedField>(std::move(J), std::move(region));
}
FieldPtr zero_field(std::size_t dim) { return std::make_shared<ZeroField>(dim); }

// A p-norm is the gauge of the unit p-ball; routing it through the gauge
// keeps the polar predicate and the exact strategies available.
FieldPtr norm_field(std::size_t dim, PNorm p) {
    return gauge_field(Gauge(ConvexBody::ball(p, 1.0, dim)));
}
FieldPtr gauge_field(Gauge g) { return std::make_shared<GaugeFieldImpl>(std::move(g)); }
FieldPtr sum(std::vector<FieldPtr> terms) { return std::make_shared<SumField>(std::move(terms)); }
FieldPtr shifted(FieldPtr f, Vector anchor) {
    return std::make_shared<ShiftedField>(std::move(f), std::move(anchor));
}

std::vector<Vector> domain_sample(const ScalarField& f, std::size_t k, std::uint64_t seed) {
    if (k < 1) throw InputError("domain_sample: k must be >= 1");
    Rng rng(seed);
    std::vector<Vector> out;
    out.reserve(k);

    if (auto support = f.finite_support()) {
        std::vector<Vector> live;
        for (const auto& p : *support)
            if (f.eval(p).finite()) live.push_back(p);
        if (live.empty()) throw DomainEmptyError("domain_sample: finite support is all infinite");
        for (std::size_t i = 0; i < k; ++i) out.push_back(live[i % live.size()]);
        return out;
    }

    if (const Region* r = f.indicator_region()) {
        // Rejection-filter region samples through the full field (a
        // perturbation may shrink the domain); cap failed trials.
        std::size_t failures = 0;
        while (out.size() < k) {
            auto batch = r->sample(std::min<std::size_t>(k - out.size(), 16), rng);
            for (const auto& p : batch) {
                if (f.eval(p).finite()) {
                    out.push_back(p);
                } else if (++failures >= 60) {
                    throw DomainEmptyError(
                        "domain_sample: 60 region samples fell outside dom f");
                }
                if (out.size() == k) break;
            }
        }
        return out;
    }

    // Full-domain fields (norms, gauges of bodies with 0 in the interior,
    // zero): seeded Gaussian cloud, rejecting infinite values.
    std::size_t failures = 0;
    while (out.size() < k) {
        Vector p = rng.normal_vector(f.dim());
        if (f.eval(p).finite())
            out.push_back(p);
        else if (++failures >= 60)
            throw DomainEmptyError("domain_sample: could not hit dom f in 60 trials");
    }
    return out;
}

CalmnessEstimate calm_constant(const ScalarField& f, const Vector& xbar, std::size_t k,
                               std::uint64_t seed, double cap) {
    if (k < 1) throw InputError("calm_constant: k must be >= 1");
    const ExtReal fx = f.eval(xbar);
    if (!fx.finite()) throw InputError("calm_constant: xbar must lie in dom f");

    CalmnessEstimate est;
    // The key special case: an indicator is calm on its domain with ell = 0.
    if (f.indicator_region() != nullptr && f.perturbation() == nullptr) {
        est.sample_count = k;
        return est;
    }

    auto samples = domain_sample(f, k, seed);
    for (const auto& x : samples) {
        const double d = (x - xbar).norm2();
        if (d <= 1e-14) continue;
        const ExtReal v = f.eval(x);
        if (!v.finite()) continue;
        est.ell = std::max(est.ell, std::abs(v.value() - fx.value()) / d);
        ++est.sample_count;
    }
    if (est.ell >= cap) {
        est.ell = cap;
        est.saturated = true;
    }
    return est;
}

}  // namespace icv
