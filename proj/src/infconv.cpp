#include "icv/infconv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "icv/errors.hpp"
#include "icv/lp.hpp"
#include "icv/projections.hpp"

namespace icv {

namespace {

void sort_and_assert_minimizers(InfConvValue& out, const ScalarField& phi, const ScalarField& f,
                                const Vector& x) {
    std::sort(out.minimizers.begin(), out.minimizers.end(),
              [](const Minimizer& a, const Minimizer& b) { return lex_less(a.point, b.point); });
    if (!out.value.finite()) return;
    for (const auto& mz : out.minimizers) {
        const ExtReal obj = phi.eval(mz.point - x) + f.eval(mz.point);
        if (!(obj.raw() <= out.value.raw() + out.slack + 1e-9 * (1.0 + std::abs(out.value.raw()))))
            throw InternalError("InfConvValue: minimizer violates its objective bound");
    }
}

// The gauge behind phi, when phi is gauge-like (gauge field or a p-norm seen
// as the gauge of the unit ball).
std::optional<Gauge> gauge_behind(const ScalarField& phi) {
    if (const Gauge* g = phi.as_gauge()) return *g;
    return std::nullopt;
}

}  // namespace

InfConvolution InfConvolution::make(FieldPtr phi, FieldPtr f, std::optional<GridSpec> grid) {
    if (!phi || !f) throw InputError("InfConvolution: phi and f must be set");
    check_same_dim(phi->dim(), f->dim(), "InfConvolution");
    const ExtReal at0 = phi->eval(Vector::zero(phi->dim()));
    if (!at0.finite() || std::abs(at0.value()) > 1e-12)
        throw InputError("InfConvolution: phi(0) must be 0");

    InfConvolution t;
    t.phi_ = std::move(phi);
    t.f_ = std::move(f);
    t.grid_ = grid;

    // Finite effective domain: exact enumeration.
    if (auto support = t.f_->finite_support()) {
        for (const auto& p : *support)
            if (t.f_->eval(p).finite()) t.candidates_.push_back(p);
        if (t.candidates_.empty())
            throw DomainEmptyError("InfConvolution: dom f is empty");
        t.strategy_ = InfConvStrategy::ExactEnumeration;
        return t;
    }

    // Pure indicator over a structured region with a gauge-like phi.
    const Region* region = t.f_->indicator_region();
    const bool pure_indicator = region != nullptr && t.f_->perturbation() == nullptr;
    if (pure_indicator) {
        if (region->kind() == Region::Kind::Union) {
            std::vector<InfConvolution> members;
            bool all_exact = true;
            for (const auto& m : region->members()) {
                InfConvolution sub = make(t.phi_, indicator(m), grid);
                all_exact = all_exact && sub.exact();
                members.push_back(std::move(sub));
            }
            if (all_exact) {
                t.union_members_ = std::move(members);
                t.is_union_ = true;
                t.strategy_ = InfConvStrategy::PolyhedralLp;
                return t;
            }
        } else if (region->kind() == Region::Kind::VPolytope ||
                   region->kind() == Region::Kind::Halfspaces) {
            if (auto g = gauge_behind(*t.phi_)) {
                const ConvexBody& body = g->body();
                if (body.kind() == ConvexBody::Kind::NormBall &&
                    body.ball_p() == PNorm::Two) {
                    t.proj_scale_ = 1.0 / body.ball_radius();
                    t.region_ = region;
                    t.strategy_ = InfConvStrategy::EuclideanProjection;
                    return t;
                }
                if (auto vs = body.as_vertex_set(); vs && !body.is_zero()) {
                    t.phi_vertices_ = *vs;
                    t.region_ = region;
                    t.strategy_ = InfConvStrategy::PolyhedralLp;
                    return t;
                }
                if (body.is_zero()) {
                    // Gauge of {0} is the indicator of {0}: T(x) = f(x).
                    t.region_ = region;
                    t.phi_vertices_ = {Vector::zero(t.f_->dim())};
                    t.strategy_ = InfConvStrategy::PolyhedralLp;
                    return t;
                }
            }
        }
    }

    if (!t.grid_) throw InputError("InfConvolution: grid bounds required for this (phi, f) pair");
    check_same_dim(t.grid_->lo.dim(), t.f_->dim(), "InfConvolution grid");
    check_same_dim(t.grid_->hi.dim(), t.f_->dim(), "InfConvolution grid");
    t.strategy_ = InfConvStrategy::GridSearch;
    return t;
}

InfConvValue InfConvolution::eval(const Vector& x, double slack) const {
    check_same_dim(x.dim(), dim(), "InfConvolution::eval");
    if (slack < 0) throw InputError("InfConvolution::eval: slack must be >= 0");
    InfConvValue out;
    bool continuous_exact = is_union_;
    if (is_union_) {
        out = eval_union(x, slack);
    } else {
        switch (strategy_) {
            case InfConvStrategy::ExactEnumeration: out = eval_enumeration(x, slack); break;
            case InfConvStrategy::PolyhedralLp:
                out = eval_poly_lp(x);
                continuous_exact = true;
                break;
            case InfConvStrategy::EuclideanProjection:
                out = eval_projection(x);
                continuous_exact = true;
                break;
            case InfConvStrategy::GridSearch: out = eval_grid(x, slack); break;
        }
    }
    out.slack = slack;

    // The solver feasibility band is wider than the field membership band.
    // A reported minimizer the fields themselves reject means x sits in the
    // hairline between the two: treat it as unreachable so the finiteness
    // domain of T agrees exactly with what the fields see.
    if (continuous_exact && out.value.finite()) {
        for (const auto& mz : out.minimizers) {
            if (!(phi_->eval(mz.point - x) + f_->eval(mz.point)).finite()) {
                InfConvValue inf_out;
                inf_out.slack = slack;
                return inf_out;
            }
        }
    }

    sort_and_assert_minimizers(out, *phi_, *f_, x);
    return out;
}

InfConvValue InfConvolution::eval_enumeration(const Vector& x, double slack) const {
    InfConvValue out;
    std::vector<std::pair<double, const Vector*>> objs;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : candidates_) {
        const ExtReal obj = phi_->eval(y - x) + f_->eval(y);
        if (!obj.finite()) continue;
        objs.emplace_back(obj.value(), &y);
        best = std::min(best, obj.value());
    }
    if (!std::isfinite(best)) return out;  // +inf, no minimizers
    out.value = best;
    for (const auto& [v, y] : objs)
        if (v <= best + slack) out.minimizers.push_back({*y, v});
    return out;
}

InfConvValue InfConvolution::eval_poly_lp(const Vector& x) const {
    const std::size_t n = x.dim();
    const std::size_t kf = phi_vertices_.size();
    InfConvValue out;

    lp::Matrix A;
    std::vector<double> b, c;
    std::size_t omega_cols_begin = 0;

    if (region_->kind() == Region::Kind::VPolytope) {
        // sum mu_i F_i - sum nu_j W_j = -x ; sum nu = 1 ; min 1'mu.
        const auto& w = region_->vertices();
        const std::size_t kw = w.size();
        A.assign(n + 1, std::vector<double>(kf + kw, 0.0));
        b.assign(n + 1, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < kf; ++j) A[i][j] = phi_vertices_[j][i];
            for (std::size_t j = 0; j < kw; ++j) A[i][kf + j] = -w[j][i];
            b[i] = -x[i];
        }
        for (std::size_t j = 0; j < kw; ++j) A[n][kf + j] = 1.0;
        b[n] = 1.0;
        c.assign(kf + kw, 0.0);
        for (std::size_t j = 0; j < kf; ++j) c[j] = 1.0;
        omega_cols_begin = kf;
    } else {
        // sum mu_i F_i - (wp - wm) = -x ; R(wp - wm) + s = offsets ; min 1'mu.
        const auto& rows = region_->rows();
        const std::size_t m = rows.size();
        const std::size_t ncols = kf + 2 * n + m;
        A.assign(n + m, std::vector<double>(ncols, 0.0));
        b.assign(n + m, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < kf; ++j) A[i][j] = phi_vertices_[j][i];
            A[i][kf + i] = -1.0;
            A[i][kf + n + i] = 1.0;
            b[i] = -x[i];
        }
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t j = 0; j < n; ++j) {
                A[n + r][kf + j] = rows[r].normal[j];
                A[n + r][kf + n + j] = -rows[r].normal[j];
            }
            A[n + r][kf + 2 * n + r] = 1.0;
            b[n + r] = rows[r].offset;
        }
        c.assign(ncols, 0.0);
        for (std::size_t j = 0; j < kf; ++j) c[j] = 1.0;
        omega_cols_begin = kf;
    }

    lp::Options opt;
    opt.feas_tol = 1e-8 * (1.0 + x.norm2());
    lp::Solution s = lp::solve_standard(A, b, c, opt);
    if (s.status == lp::Status::IterationLimit)
        throw InternalError("InfConvolution: simplex pivot budget exceeded");
    if (s.status == lp::Status::Infeasible) return out;  // unreachable: +inf
    if (s.status != lp::Status::Optimal)
        throw InternalError("InfConvolution: unexpected LP status");

    out.value = std::max(s.objective, 0.0);
    Vector y = Vector::zero(n);
    if (region_->kind() == Region::Kind::VPolytope) {
        const auto& w = region_->vertices();
        for (std::size_t j = 0; j < w.size(); ++j) y = y + s.x[omega_cols_begin + j] * w[j];
    } else {
        for (std::size_t i = 0; i < n; ++i)
            y[i] = s.x[omega_cols_begin + i] - s.x[omega_cols_begin + n + i];
    }
    out.minimizers.push_back({y, out.value.value()});
    return out;
}

InfConvValue InfConvolution::eval_projection(const Vector& x) const {
    InfConvValue out;
    if (region_->kind() == Region::Kind::VPolytope) {
        auto pr = geom::project_onto_vpolytope(region_->vertices(), x);
        out.value = proj_scale_ * pr.distance;
        out.minimizers.push_back({pr.point, out.value.value()});
        return out;
    }
    std::vector<Covector> rows;
    std::vector<double> offsets;
    for (const auto& h : region_->rows()) {
        rows.push_back(h.normal);
        offsets.push_back(h.offset);
    }
    auto pr = geom::project_onto_halfspaces(rows, offsets, x);
    if (!pr) return out;  // empty region: +inf everywhere
    out.value = proj_scale_ * pr->distance;
    out.minimizers.push_back({pr->point, out.value.value()});
    return out;
}

InfConvValue InfConvolution::eval_union(const Vector& x, double slack) const {
    InfConvValue out;
    std::vector<Minimizer> all;
    for (const auto& member : union_members_) {
        InfConvValue v = member.eval(x, slack);
        if (v.value < out.value) out.value = v.value;
        all.insert(all.end(), v.minimizers.begin(), v.minimizers.end());
        out.approximate = out.approximate || v.approximate;
    }
    if (out.value.finite())
        for (const auto& mz : all)
            if (mz.objective <= out.value.raw() + slack) out.minimizers.push_back(mz);
    return out;
}

InfConvValue InfConvolution::eval_grid(const Vector& x, double slack) const {
    const GridSpec& g = *grid_;
    const std::size_t n = x.dim();
    InfConvValue out;
    out.approximate = true;

    Vector lo = g.lo, hi = g.hi;
    double best = std::numeric_limits<double>::infinity();
    Vector best_node = lo;
    std::vector<Minimizer> near;
    bool any_finite_f = false;

    for (int level = 0; level < std::max(g.refinement_levels, 1); ++level) {
        const int res = g.resolution;
        std::vector<int> idx(n, 0);
        std::vector<double> step(n);
        for (std::size_t i = 0; i < n; ++i) step[i] = (hi[i] - lo[i]) / res;

        for (;;) {
            Vector y = lo;
            for (std::size_t i = 0; i < n; ++i) y[i] = lo[i] + step[i] * idx[i];
            const ExtReal fv = f_->eval(y);
            if (fv.finite()) {
                any_finite_f = true;
                const ExtReal obj = phi_->eval(y - x) + fv;
                if (obj.finite()) {
                    const double o = obj.value();
                    if (o < best) {
                        best = o;
                        best_node = y;
                    }
                    if (o <= best + slack) near.push_back({y, o});
                }
            }
            std::size_t carry = 0;
            while (carry < n && ++idx[carry] > res) idx[carry++] = 0;
            if (carry == n) break;
        }

        out.grid_level_values.push_back(best);
        if (!std::isfinite(best)) break;  // nothing to refine around

        // Halve the cell size around the incumbent: the next box spans
        // resolution/4 old cells on each side of the best node.
        Vector nlo = lo, nhi = hi;
        for (std::size_t i = 0; i < n; ++i) {
            const double halfwidth = step[i] * res / 4.0;
            nlo[i] = std::max(lo[i], best_node[i] - halfwidth);
            nhi[i] = std::min(hi[i], best_node[i] + halfwidth);
        }
        lo = nlo;
        hi = nhi;
    }

    if (!std::isfinite(best)) {
        if (!any_finite_f) out.warning = "grid bounds exclude dom f (domain unreachable)";
        return out;
    }
    out.value = best;
    for (const auto& mz : near)
        if (mz.objective <= best + slack) out.minimizers.push_back(mz);
    // Deduplicate lexicographically equal nodes across levels.
    std::sort(out.minimizers.begin(), out.minimizers.end(),
              [](const Minimizer& a, const Minimizer& b) { return lex_less(a.point, b.point); });
    out.minimizers.erase(std::unique(out.minimizers.begin(), out.minimizers.end(),
                                     [](const Minimizer& a, const Minimizer& b) {
                                         return !lex_less(a.point, b.point) &&
                                                !lex_less(b.point, a.point);
                                     }),
                         out.minimizers.end());
    return out;
}

InfConvolution minimal_time_infconv(const ConvexBody& F, const Region& omega,
                                    std::optional<GridSpec> grid) {
    return InfConvolution::make(gauge_field(Gauge(F)), indicator(omega), grid);
}

InfConvValue minimal_time(const ConvexBody& F, const Region& omega, const Vector& x,
                          std::optional<GridSpec> grid) {
    return minimal_time_infconv(F, omega, grid).eval(x);
}

bool is_in_S0(const InfConvolution& T, const Vector& x, double tol) {
    if (tol < 0) throw InputError("is_in_S0: tol must be >= 0");
    const ExtReal fx = T.f().eval(x);
    if (!fx.finite()) return false;
    const ExtReal tx = T.eval(x, 0.0).value;
    if (!tx.finite()) return false;
    return std::abs(tx.value() - fx.value()) <= tol;
}

}  // namespace icv
