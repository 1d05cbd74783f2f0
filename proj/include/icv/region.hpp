#pragma once

#include <memory>
#include <vector>

#include "icv/rng.hpp"
#include "icv/vec.hpp"

namespace icv {

struct Halfspace {
    Covector normal;  // <normal, x> <= offset
    double offset = 0.0;
};

// Target sets Omega: finite point clouds, V-polytopes, halfspace
// intersections, and finite unions. Emptiness of halfspace intersections is
// detected at use, not at construction.
class Region {
public:
    enum class Kind { PointCloud, VPolytope, Halfspaces, Union };

    static Region point_cloud(std::vector<Vector> points);
    static Region vpolytope(std::vector<Vector> vertices);
    static Region halfspaces(std::vector<Halfspace> rows);
    static Region union_of(std::vector<Region> members);

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }

    const std::vector<Vector>& points() const;      // PointCloud
    const std::vector<Vector>& vertices() const;    // VPolytope
    const std::vector<Halfspace>& rows() const;     // Halfspaces
    const std::vector<Region>& members() const;     // Union

    bool contains(const Vector& x, double tol) const;

    // A point of the region suitable as a sampler start; pushed toward the
    // interior for halfspace intersections. Throws DomainEmptyError when the
    // region is provably empty.
    Vector feasible_point() const;

    // Seeded sample with every output inside the region. Point clouds cycle;
    // polytopes draw convex combinations; halfspace intersections run
    // hit-and-run (64 burn-in steps per sample) clipped to a large box.
    std::vector<Vector> sample(std::size_t k, Rng& rng) const;

private:
    Region() = default;
    Kind kind_ = Kind::PointCloud;
    std::size_t dim_ = 0;
    std::vector<Vector> pts_;
    std::vector<Halfspace> rows_;
    std::vector<Region> members_;
};

}  // namespace icv
