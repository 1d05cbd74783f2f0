#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icv/convex_body.hpp"
#include "icv/field.hpp"

namespace icv {

struct GridSpec {
    Vector lo, hi;
    int resolution = 64;         // cells per axis at the first level
    int refinement_levels = 3;
};

enum class InfConvStrategy { ExactEnumeration, PolyhedralLp, EuclideanProjection, GridSearch };

struct Minimizer {
    Vector point;
    double objective = 0.0;
};

struct InfConvValue {
    ExtReal value = ExtReal::infinity();
    std::vector<Minimizer> minimizers;  // objective <= value + slack, lex ordered
    double slack = 0.0;
    bool approximate = false;           // GridSearch upper bound
    std::vector<double> grid_level_values;  // per-refinement incumbents (GridSearch)
    std::string warning;                // e.g. grid bounds exclude dom f
};

// T(x) = inf_y { phi(y - x) + f(y) } with phi(0) = 0.
//
// The evaluation strategy is chosen from the structure of (phi, f):
// finite-domain f is enumerated exactly; indicator f over polyhedral regions
// with a V-representable gauge reduces to one small LP (or, for Euclidean
// balls, an exact projection); anything else falls back to grid search over
// caller-supplied bounds, flagged approximate.
class InfConvolution {
public:
    static InfConvolution make(FieldPtr phi, FieldPtr f, std::optional<GridSpec> grid = {});

    InfConvValue eval(const Vector& x, double slack = 1e-9) const;
    ExtReal value(const Vector& x) const { return eval(x, 0.0).value; }

    const ScalarField& phi() const { return *phi_; }
    const ScalarField& f() const { return *f_; }
    FieldPtr phi_ptr() const { return phi_; }
    FieldPtr f_ptr() const { return f_; }
    InfConvStrategy strategy() const { return strategy_; }
    bool exact() const { return strategy_ != InfConvStrategy::GridSearch; }
    std::size_t dim() const { return f_->dim(); }

private:
    InfConvolution() = default;

    InfConvValue eval_enumeration(const Vector& x, double slack) const;
    InfConvValue eval_poly_lp(const Vector& x) const;
    InfConvValue eval_projection(const Vector& x) const;
    InfConvValue eval_grid(const Vector& x, double slack) const;
    InfConvValue eval_union(const Vector& x, double slack) const;

    FieldPtr phi_, f_;
    InfConvStrategy strategy_ = InfConvStrategy::GridSearch;

    std::vector<Vector> candidates_;          // enumeration
    std::vector<Vector> phi_vertices_;        // PolyhedralLp: gauge body vertices
    double proj_scale_ = 1.0;                 // EuclideanProjection: 1/radius
    const Region* region_ = nullptr;          // borrowed from f_ (kept alive by f_)
    std::optional<GridSpec> grid_;
    std::vector<InfConvolution> union_members_;
    bool is_union_ = false;
};

// Minimal time to reach Omega moving with velocity set F, evaluated at x:
// the infimal convolution of the gauge of F with the indicator of Omega.
InfConvValue minimal_time(const ConvexBody& F, const Region& omega, const Vector& x,
                          std::optional<GridSpec> grid = {});
InfConvolution minimal_time_infconv(const ConvexBody& F, const Region& omega,
                                    std::optional<GridSpec> grid = {});

// x in S0  <=>  f(x) finite and T(x) = f(x) within tol.
bool is_in_S0(const InfConvolution& T, const Vector& x, double tol);

}  // namespace icv
