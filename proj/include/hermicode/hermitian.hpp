// The non-degenerate Hermitian surface X : x0^{t+1} + x1^{t+1} + x2^{t+1} +
// x3^{t+1} = 0 in PG(3, t^2) together with its incidence structure: tangent
// planes, plane section classification, and the generator/tangent/secant
// trichotomy of lines.
//
// Everything is precomputed at construction and immutable afterwards, so a
// surface can be shared read-only by any number of enumeration workers.

#pragma once

#include <string>
#include <vector>

#include "hermicode/projgeom.hpp"

namespace hermicode {

enum class LineKind : uint8_t { Generator, Tangent, Secant };

enum class PlaneSection : uint8_t { TangentSection, NonTangentSection };

class HermitianSurface {
public:
    explicit HermitianSurface(const Geometry& g);

    const Geometry& geometry() const noexcept { return *g_; }
    int t() const noexcept { return t_; }

    // Points of X in global point order.
    const std::vector<int>& points() const noexcept { return points_; }
    const PointMask& mask() const noexcept { return mask_; }
    int size() const noexcept { return static_cast<int>(points_.size()); }
    bool contains(int point_id) const noexcept { return mask_.test(point_id); }
    // Position of a point within points(), or -1 when off the surface.
    int surface_row(int point_id) const noexcept { return row_of_point_[point_id]; }

    // The tangent plane at a point of X (coefficients are the conjugated
    // point coordinates). Verified at construction: its section of X has
    // exactly t^3+t^2+1 points for every point of X.
    int tangent_plane(int point_id) const;

    PlaneSection classify_plane(int plane_id) const {
        return plane_is_tangent(plane_id) ? PlaneSection::TangentSection : PlaneSection::NonTangentSection;
    }
    // Sorted points of the plane's section of X.
    std::vector<int> plane_section(int plane_id) const;
    bool plane_is_tangent(int plane_id) const noexcept { return tangency_point_[plane_id] >= 0; }
    int plane_section_size(int plane_id) const noexcept { return section_size_[plane_id]; }
    // The point of tangency of a tangent plane, -1 for non-tangent planes.
    int tangency_point(int plane_id) const noexcept { return tangency_point_[plane_id]; }

    LineKind classify_line(int line_id) const noexcept { return line_kind_[line_id]; }
    bool line_is_generator(int line_id) const noexcept { return line_kind_[line_id] == LineKind::Generator; }
    // All lines fully contained in X.
    const std::vector<int>& generators() const noexcept { return generators_; }

    // A tangent plane section decomposed into its t+1 generator lines
    // through the tangency point.
    struct TangentSection {
        int center;              // the tangency point
        std::vector<int> lines;  // t+1 generator line ids
    };
    TangentSection decompose_tangent_section(int plane_id) const;

    // Counts of the line kinds through one point of X: t+1 generators,
    // t^2-t tangents, t^4 secants.
    struct LineCensus {
        int generators = 0;
        int tangents = 0;
        int secants = 0;
    };
    LineCensus line_census_at(int point_id) const;
    // Text dump of per-point line censuses for audit.
    std::string line_census_text(int max_points = -1) const;

private:
    const Geometry* g_;
    int t_;
    std::vector<int> points_;
    PointMask mask_;
    std::vector<int> row_of_point_;
    std::vector<int> tangent_plane_of_point_;  // indexed by point id, -1 off X
    std::vector<int> tangency_point_;          // indexed by plane id, -1 when non-tangent
    std::vector<int> section_size_;            // indexed by plane id
    std::vector<LineKind> line_kind_;          // indexed by line id
    std::vector<int> generators_;
};

}  // namespace hermicode
