#include "icv/region.hpp"

#include <algorithm>
#include <cmath>

#include "icv/convex_body.hpp"
#include "icv/errors.hpp"
#include "icv/lp.hpp"

namespace icv {

Region Region::point_cloud(std::vector<Vector> points) {
    if (points.empty()) throw InputError("Region: point cloud must be nonempty");
    const std::size_t n = points[0].dim();
    for (const auto& p : points) check_same_dim(p.dim(), n, "Region::point_cloud");
    Region r;
    r.kind_ = Kind::PointCloud;
    r.dim_ = n;
    r.pts_ = std::move(points);
    return r;
}

Region Region::vpolytope(std::vector<Vector> vertices) {
    if (vertices.empty()) throw InputError("Region: V-polytope must have vertices");
    const std::size_t n = vertices[0].dim();
    for (const auto& p : vertices) check_same_dim(p.dim(), n, "Region::vpolytope");
    Region r;
    r.kind_ = Kind::VPolytope;
    r.dim_ = n;
    r.pts_ = std::move(vertices);
    return r;
}

Region Region::halfspaces(std::vector<Halfspace> rows) {
    if (rows.empty()) throw InputError("Region: halfspace list must be nonempty");
    const std::size_t n = rows[0].normal.dim();
    for (const auto& h : rows) check_same_dim(h.normal.dim(), n, "Region::halfspaces");
    Region r;
    r.kind_ = Kind::Halfspaces;
    r.dim_ = n;
    r.rows_ = std::move(rows);
    return r;
}

Region Region::union_of(std::vector<Region> members) {
    if (members.empty()) throw InputError("Region: union must have members");
    const std::size_t n = members[0].dim();
    for (const auto& m : members) check_same_dim(m.dim(), n, "Region::union_of");
    Region r;
    r.kind_ = Kind::Union;
    r.dim_ = n;
    r.members_ = std::move(members);
    return r;
}

const std::vector<Vector>& Region::points() const {
    if (kind_ != Kind::PointCloud) throw InputError("Region: not a point cloud");
    return pts_;
}
const std::vector<Vector>& Region::vertices() const {
    if (kind_ != Kind::VPolytope) throw InputError("Region: not a V-polytope");
    return pts_;
}
const std::vector<Halfspace>& Region::rows() const {
    if (kind_ != Kind::Halfspaces) throw InputError("Region: not a halfspace intersection");
    return rows_;
}
const std::vector<Region>& Region::members() const {
    if (kind_ != Kind::Union) throw InputError("Region: not a union");
    return members_;
}

bool Region::contains(const Vector& x, double tol) const {
    check_same_dim(x.dim(), dim_, "Region::contains");
    switch (kind_) {
        case Kind::PointCloud: {
            for (const auto& p : pts_)
                if ((x - p).norm2() <= tol + 1e-12 * (1.0 + p.norm2())) return true;
            return false;
        }
        case Kind::VPolytope: return vpolytope_contains(pts_, x, tol);
        case Kind::Halfspaces: {
            for (const auto& h : rows_) {
                const double scale = std::max(h.normal.norm2(), 1e-30);
                if (pairing(h.normal, x) - h.offset > tol * scale) return false;
            }
            return true;
        }
        case Kind::Union: {
            for (const auto& m : members_)
                if (m.contains(x, tol)) return true;
            return false;
        }
    }
    return false;
}

namespace {

// Feasible point of { <a_i, x> <= b_i }, pushed toward the interior via a
// radius-capped Chebyshev-center LP. Throws DomainEmptyError when infeasible.
Vector halfspace_feasible_point(const std::vector<Halfspace>& rows, std::size_t n) {
    // Variables: x = xp - xm (n + n), inscribed radius r, slacks s (m).
    // <a_i, xp - xm> + r ||a_i|| + s_i = b_i,  r <= 1 (capped),  max r.
    const std::size_t m = rows.size();
    const std::size_t ncols = 2 * n + 1 + m + 1;  // xp xm r s rcap_slack
    lp::Matrix A(m + 1, std::vector<double>(ncols, 0.0));
    std::vector<double> b(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            A[i][j] = rows[i].normal[j];
            A[i][n + j] = -rows[i].normal[j];
        }
        A[i][2 * n] = rows[i].normal.norm2();
        A[i][2 * n + 1 + i] = 1.0;
        b[i] = rows[i].offset;
    }
    A[m][2 * n] = 1.0;
    A[m][ncols - 1] = 1.0;
    b[m] = 1.0;  // r <= 1 keeps the LP bounded on unbounded regions

    std::vector<double> c(ncols, 0.0);
    c[2 * n] = -1.0;  // maximize r

    lp::Options opt;
    lp::Solution s = lp::solve_standard(A, b, c, opt);
    if (s.status == lp::Status::Infeasible)
        throw DomainEmptyError("halfspace region is empty (infeasible system)");
    if (s.status != lp::Status::Optimal)
        throw InternalError("halfspace feasible point: unexpected LP status");
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = s.x[j] - s.x[n + j];
    return Vector(std::move(x));
}

}  // namespace

Vector Region::feasible_point() const {
    switch (kind_) {
        case Kind::PointCloud:
        case Kind::VPolytope: return pts_[0];
        case Kind::Halfspaces: return halfspace_feasible_point(rows_, dim_);
        case Kind::Union: {
            std::string last;
            for (const auto& m : members_) {
                try {
                    return m.feasible_point();
                } catch (const DomainEmptyError& e) {
                    last = e.what();
                }
            }
            throw DomainEmptyError("union region is empty: " + last);
        }
    }
    throw InternalError("Region::feasible_point: unreachable");
}

std::vector<Vector> Region::sample(std::size_t k, Rng& rng) const {
    std::vector<Vector> out;
    out.reserve(k);
    switch (kind_) {
        case Kind::PointCloud: {
            for (std::size_t i = 0; i < k; ++i) out.push_back(pts_[i % pts_.size()]);
            return out;
        }
        case Kind::VPolytope: {
            for (std::size_t i = 0; i < k; ++i) {
                auto w = rng.simplex_weights(pts_.size());
                Vector p = Vector::zero(dim_);
                for (std::size_t j = 0; j < pts_.size(); ++j) p = p + w[j] * pts_[j];
                out.push_back(p);
            }
            return out;
        }
        case Kind::Halfspaces: {
            Vector x = halfspace_feasible_point(rows_, dim_);
            const double clip = 10.0 * (1.0 + x.norm_inf());
            for (std::size_t i = 0; i < k; ++i) {
                for (int step = 0; step < 64; ++step) {
                    Vector d = rng.unit_vector(dim_);
                    double tlo = -clip, thi = clip;
                    // Chord range from the box clip.
                    for (std::size_t j = 0; j < dim_; ++j) {
                        if (std::abs(d[j]) < 1e-14) continue;
                        const double a = (-clip - x[j]) / d[j];
                        const double b = (clip - x[j]) / d[j];
                        tlo = std::max(tlo, std::min(a, b));
                        thi = std::min(thi, std::max(a, b));
                    }
                    for (const auto& h : rows_) {
                        const double ad = pairing(h.normal, d);
                        const double slack = h.offset - pairing(h.normal, x);
                        if (ad > 1e-14)
                            thi = std::min(thi, slack / ad);
                        else if (ad < -1e-14)
                            tlo = std::max(tlo, slack / ad);
                    }
                    if (thi <= tlo) continue;  // degenerate chord, redraw
                    x = x + rng.uniform(tlo, thi) * d;
                }
                out.push_back(x);
            }
            return out;
        }
        case Kind::Union: {
            // Cycle through the nonempty members.
            std::vector<const Region*> live;
            for (const auto& m : members_) {
                try {
                    (void)m.feasible_point();
                    live.push_back(&m);
                } catch (const DomainEmptyError&) {
                }
            }
            if (live.empty()) throw DomainEmptyError("union region is empty");
            std::size_t produced = 0;
            while (produced < k) {
                for (const Region* m : live) {
                    if (produced == k) break;
                    auto s = m->sample(1, rng);
                    out.push_back(s[0]);
                    ++produced;
                }
            }
            return out;
        }
    }
    throw InternalError("Region::sample: unreachable");
}

}  // namespace icv
