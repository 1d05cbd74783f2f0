#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "icv/ext_real.hpp"
#include "icv/gauge.hpp"
#include "icv/region.hpp"
#include "icv/vec.hpp"

namespace icv {

class ScalarField;
using FieldPtr = std::shared_ptr<const ScalarField>;

// Extended-real-valued function R^n -> (-inf, +inf]. Immutable expression
// nodes; evaluation is pure and never produces -inf or NaN.
class ScalarField {
public:
    virtual ~ScalarField() = default;

    virtual ExtReal eval(const Vector& x) const = 0;
    virtual std::size_t dim() const = 0;

    // Candidate points covering the finite effective domain when that domain
    // is finite (tables, point-cloud indicators). Callers must still filter
    // through eval.
    virtual std::optional<std::vector<Vector>> finite_support() const { return std::nullopt; }

    // Structure probes used to pick exact evaluation strategies.
    virtual const Region* indicator_region() const { return nullptr; }  // delta_Omega part
    virtual const ScalarField* perturbation() const { return nullptr; } // J in J + delta_Omega
    virtual const Gauge* as_gauge() const { return nullptr; }
    virtual bool is_zero() const { return false; }

    ExtReal operator()(const Vector& x) const { return eval(x); }
};

FieldPtr indicator(Region region);
FieldPtr table_field(std::vector<std::pair<Vector, double>> entries);
FieldPtr perturbed(FieldPtr J, Region region);  // J + delta_Omega
FieldPtr zero_field(std::size_t dim);
FieldPtr norm_field(std::size_t dim, PNorm p);
FieldPtr gauge_field(Gauge g);
FieldPtr sum(std::vector<FieldPtr> terms);
FieldPtr shifted(FieldPtr f, Vector anchor);  // y -> f(y - anchor)

// k points with f finite, deterministic per seed. Point clouds and tables
// cycle; polytopes draw convex combinations; halfspace regions use
// hit-and-run. Throws DomainEmptyError after 60 failed trials.
std::vector<Vector> domain_sample(const ScalarField& f, std::size_t k, std::uint64_t seed);

struct CalmnessEstimate {
    double ell = 0.0;
    std::size_t sample_count = 0;
    bool saturated = false;
};

// Sampled lower estimate of the center-Lipschitz constant of f at xbar over
// its domain: max |f(x)-f(xbar)| / ||x-xbar||, clamped at cap. Indicators
// return exactly 0.
CalmnessEstimate calm_constant(const ScalarField& f, const Vector& xbar, std::size_t k,
                               std::uint64_t seed, double cap);

}  // namespace icv
