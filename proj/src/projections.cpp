#include "icv/projections.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "icv/errors.hpp"

namespace icv::geom {

namespace {

constexpr std::size_t kMaxEnumerable = 16;  // subset enumeration cap

std::vector<std::size_t> mask_indices(std::uint32_t mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) idx.push_back(i);
    return idx;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> rhs,
                  std::vector<double>& out, double tol) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) <= tol) return false;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        const double inv = 1.0 / a[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] * inv;
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / a[i][i];
    return true;
}

ProjectionResult project_onto_vpolytope(const std::vector<Vector>& vertices, const Vector& x) {
    if (vertices.empty()) throw InputError("project_onto_vpolytope: no vertices");
    const std::size_t k = vertices.size();
    const std::size_t n = x.dim();
    if (k > kMaxEnumerable)
        throw InputError("project_onto_vpolytope: too many vertices for exact enumeration");

    ProjectionResult best;
    best.distance = std::numeric_limits<double>::infinity();

    const std::uint32_t full = (k >= 32) ? 0xffffffffu : ((1u << k) - 1u);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const auto idx = mask_indices(mask);
        if (idx.size() > n + 1) continue;

        const Vector& v0 = vertices[idx[0]];
        const std::size_t d = idx.size() - 1;
        Vector cand = v0;
        std::vector<double> bary(idx.size(), 1.0);

        if (d > 0) {
            // Least squares onto the affine hull: p = v0 + sum t_i (v_i - v0).
            std::vector<std::vector<double>> gram(d, std::vector<double>(d));
            std::vector<double> rhs(d);
            std::vector<std::vector<double>> dirs(d);
            for (std::size_t i = 0; i < d; ++i) {
                Vector e = vertices[idx[i + 1]] - v0;
                dirs[i] = e.coords();
            }
            Vector dx = x - v0;
            for (std::size_t i = 0; i < d; ++i) {
                rhs[i] = dot(dirs[i], dx.coords());
                for (std::size_t j = 0; j < d; ++j) gram[i][j] = dot(dirs[i], dirs[j]);
            }
            std::vector<double> t;
            if (!solve_linear(gram, rhs, t)) continue;  // affinely dependent subset
            double t0 = 1.0;
            for (std::size_t i = 0; i < d; ++i) {
                bary[i + 1] = t[i];
                t0 -= t[i];
            }
            bary[0] = t0;
            std::vector<double> c(n, 0.0);
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < n; ++j) c[j] += bary[i] * vertices[idx[i]][j];
            cand = Vector(std::move(c));
        }

        bool convex = true;
        for (double b : bary)
            if (b < -1e-9) convex = false;
        if (!convex) continue;

        if (idx.size() > 1) {
            // Clamp tiny negative coefficients and renormalize so the
            // candidate is an honest convex combination.
            double sum = 0.0;
            for (double& b : bary) {
                b = std::max(b, 0.0);
                sum += b;
            }
            std::vector<double> c(n, 0.0);
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < n; ++j) c[j] += (bary[i] / sum) * vertices[idx[i]][j];
            cand = Vector(std::move(c));
        }

        const double dist = (x - cand).norm2();
        if (dist < best.distance) {
            best.distance = dist;
            best.point = cand;
        }
    }
    return best;
}

std::optional<ProjectionResult> project_onto_halfspaces(const std::vector<Covector>& rows,
                                                        const std::vector<double>& offsets,
                                                        const Vector& x) {
    const std::size_t m = rows.size();
    const std::size_t n = x.dim();
    if (offsets.size() != m) throw InputError("project_onto_halfspaces: row/offset mismatch");
    if (m > kMaxEnumerable)
        throw InputError("project_onto_halfspaces: too many rows for exact enumeration");

    // Same acceptance convention as halfspace region membership: residual at
    // most 1e-9 times the row norm, so reported projections land inside the
    // region as the indicator sees it.
    auto feasible = [&](const Vector& p) {
        for (std::size_t i = 0; i < m; ++i) {
            const double scale = std::max(rows[i].norm2(), 1e-30);
            if (pairing(rows[i], p) - offsets[i] > 1e-9 * scale) return false;
        }
        return true;
    };

    ProjectionResult best;
    best.distance = std::numeric_limits<double>::infinity();
    if (feasible(x)) {
        best.point = x;
        best.distance = 0.0;
        return best;
    }

    const std::uint32_t full = (m >= 32) ? 0xffffffffu : ((1u << m) - 1u);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const auto idx = mask_indices(mask);
        if (idx.size() > n) continue;
        const std::size_t s = idx.size();

        // Project onto { A_S y = b_S }: y = x - A_S' w, (A_S A_S') w = A_S x - b_S.
        std::vector<std::vector<double>> gram(s, std::vector<double>(s));
        std::vector<double> rhs(s);
        for (std::size_t i = 0; i < s; ++i) {
            rhs[i] = pairing(rows[idx[i]], x) - offsets[idx[i]];
            for (std::size_t j = 0; j < s; ++j)
                gram[i][j] = dot(rows[idx[i]].coords(), rows[idx[j]].coords());
        }
        std::vector<double> w;
        if (!solve_linear(gram, rhs, w)) continue;  // dependent rows

        std::vector<double> c = x.coords();
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < n; ++j) c[j] -= w[i] * rows[idx[i]][j];
        Vector cand(std::move(c));
        if (!feasible(cand)) continue;

        const double dist = (x - cand).norm2();
        if (dist < best.distance) {
            best.distance = dist;
            best.point = cand;
        }
    }

    if (!std::isfinite(best.distance)) return std::nullopt;  // empty polyhedron
    return best;
}

ConeProjection project_onto_cone(const std::vector<Covector>& generators, const Covector& target) {
    const std::size_t k = generators.size();
    const std::size_t n = target.dim();
    if (k > kMaxEnumerable)
        throw InputError("project_onto_cone: too many generators for exact enumeration");

    double gen_scale = 1.0;
    for (const auto& g : generators) gen_scale = std::max(gen_scale, g.norm2());
    const double kkt_tol = 1e-9 * gen_scale * (1.0 + target.norm2());

    auto kkt_ok = [&](const std::vector<double>& resid) {
        for (const auto& g : generators)
            if (dot(resid, g.coords()) > kkt_tol) return false;
        return true;
    };

    ConeProjection best;
    best.projection = Covector::zero(n);
    best.distance = std::numeric_limits<double>::infinity();
    bool have_kkt = false;

    auto consider = [&](const Covector& proj, bool kkt) {
        const double dist = (as_vector(target) - as_vector(proj)).norm2();
        const bool upgrade = kkt && !have_kkt;
        const bool improvement = (kkt == have_kkt) && dist < best.distance;
        if (upgrade || improvement) {
            best.distance = dist;
            best.projection = proj;
            have_kkt = have_kkt || kkt;
        }
    };

    {
        // Empty support: projection at the apex.
        std::vector<double> resid = target.coords();
        consider(Covector::zero(n), kkt_ok(resid));
    }

    const std::uint32_t full = (k == 0) ? 0 : ((k >= 32) ? 0xffffffffu : ((1u << k) - 1u));
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const auto idx = mask_indices(mask);
        if (idx.size() > n) continue;
        const std::size_t s = idx.size();

        std::vector<std::vector<double>> gram(s, std::vector<double>(s));
        std::vector<double> rhs(s);
        for (std::size_t i = 0; i < s; ++i) {
            rhs[i] = dot(generators[idx[i]].coords(), target.coords());
            for (std::size_t j = 0; j < s; ++j)
                gram[i][j] = dot(generators[idx[i]].coords(), generators[idx[j]].coords());
        }
        std::vector<double> t;
        if (!solve_linear(gram, rhs, t)) continue;

        bool nonneg = true;
        for (double v : t)
            if (v < -1e-11) nonneg = false;
        if (!nonneg) continue;

        std::vector<double> p(n, 0.0);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < n; ++j) p[j] += std::max(t[i], 0.0) * generators[idx[i]][j];
        Covector proj(std::move(p));
        std::vector<double> resid(n);
        for (std::size_t j = 0; j < n; ++j) resid[j] = target[j] - proj[j];
        consider(proj, kkt_ok(resid));
    }

    // A KKT-certified candidate always exists mathematically; fall back to the
    // best feasible candidate under severe degeneracy.
    std::vector<double> rd(n, 0.0);
    if (best.distance > 1e-14) {
        for (std::size_t j = 0; j < n; ++j) rd[j] = (target[j] - best.projection[j]) / best.distance;
    }
    best.residual_direction = Covector(std::move(rd));
    return best;
}

}  // namespace icv::geom
