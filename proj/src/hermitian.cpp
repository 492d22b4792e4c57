#include "hermicode/hermitian.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermicode {

HermitianSurface::HermitianSurface(const Geometry& g) : g_(&g) {
    const Field& F = g.field();
    t_ = F.t();  // throws when the field is not a square extension
    const int n = g.num_points();

    mask_ = PointMask(n);
    row_of_point_.assign(n, -1);
    for (int p = 0; p < n; ++p) {
        const auto& v = g.point(p);
        int acc = 0;
        for (int i = 0; i < 4; ++i) acc = F.addu(acc, F.normu(v[i]));
        if (acc == 0) {
            row_of_point_[p] = static_cast<int>(points_.size());
            points_.push_back(p);
            mask_.set(p);
        }
    }
    const long long expected = static_cast<long long>(t_) * t_ + 1;
    if (static_cast<long long>(points_.size()) != expected * (static_cast<long long>(t_) * t_ * t_ + 1))
        throw std::logic_error("hermitian surface has unexpected size");

    // Plane sections: t^3+1 (non-tangent) or t^3+t^2+1 (tangent), nothing else.
    const int tangent_size = t_ * t_ * t_ + t_ * t_ + 1;
    const int nontangent_size = t_ * t_ * t_ + 1;
    section_size_.assign(g.num_planes(), 0);
    tangency_point_.assign(g.num_planes(), -1);
    for (int h = 0; h < g.num_planes(); ++h) {
        const int s = g.plane(h).mask.and_count(mask_);
        if (s != tangent_size && s != nontangent_size)
            throw std::logic_error("plane section of unexpected size " + std::to_string(s));
        section_size_[h] = s;
    }

    // Tangent plane at P: coefficients are the conjugated coordinates of P.
    // The formula is confirmed here by the section size at every point.
    tangent_plane_of_point_.assign(n, -1);
    for (int p : points_) {
        const auto& v = g.point(p);
        std::array<int, 4> coeffs;
        for (int i = 0; i < 4; ++i) coeffs[i] = F.conjugateu(v[i]);
        const int h = g.plane_index(coeffs);
        if (!g.plane(h).mask.test(p)) throw std::logic_error("tangent plane misses its point");
        if (section_size_[h] != tangent_size)
            throw std::logic_error("tangent plane candidate has a non-tangent section");
        if (tangency_point_[h] >= 0) throw std::logic_error("two points share a tangent plane");
        tangency_point_[h] = p;
        tangent_plane_of_point_[p] = h;
    }

    // Line trichotomy by section size.
    line_kind_.assign(g.num_lines(), LineKind::Secant);
    for (int l = 0; l < g.num_lines(); ++l) {
        const int s = g.line(l).mask.and_count(mask_);
        if (s == t_ * t_ + 1) {
            line_kind_[l] = LineKind::Generator;
            generators_.push_back(l);
        } else if (s == 1) {
            line_kind_[l] = LineKind::Tangent;
        } else if (s == t_ + 1) {
            line_kind_[l] = LineKind::Secant;
        } else {
            throw std::logic_error("line meets the surface in " + std::to_string(s) + " points");
        }
    }
}

std::vector<int> HermitianSurface::plane_section(int plane_id) const {
    std::vector<int> out;
    out.reserve(section_size_[plane_id]);
    for (int p : g_->plane(plane_id).points)
        if (mask_.test(p)) out.push_back(p);
    return out;
}

int HermitianSurface::tangent_plane(int point_id) const {
    const int h = tangent_plane_of_point_[point_id];
    if (h < 0) throw std::invalid_argument("point is not on the hermitian surface");
    return h;
}

HermitianSurface::TangentSection HermitianSurface::decompose_tangent_section(int plane_id) const {
    const Geometry& g = *g_;
    const int center = tangency_point_[plane_id];
    if (center < 0) throw std::invalid_argument("plane is not tangent to the surface");

    std::vector<int> remaining;
    for (int p : g.plane(plane_id).points)
        if (mask_.test(p) && p != center) remaining.push_back(p);

    TangentSection out;
    out.center = center;
    // Greedy split: join the center to the smallest uncovered section point,
    // peel the resulting generator, repeat.
    while (!remaining.empty()) {
        const int s = remaining.front();
        const int l = g.line_through(center, s);
        if (line_kind_[l] != LineKind::Generator)
            throw std::logic_error("tangent section contains a non-generator line");
        out.lines.push_back(l);
        const PointMask& lm = g.line(l).mask;
        remaining.erase(std::remove_if(remaining.begin(), remaining.end(),
                                       [&](int p) { return lm.test(p); }),
                        remaining.end());
    }
    if (static_cast<int>(out.lines.size()) != t_ + 1)
        throw std::logic_error("tangent section is not t+1 lines");
    return out;
}

HermitianSurface::LineCensus HermitianSurface::line_census_at(int point_id) const {
    if (!mask_.test(point_id)) throw std::invalid_argument("point is not on the hermitian surface");
    LineCensus c;
    for (int l : g_->lines_through_point(point_id)) {
        switch (line_kind_[l]) {
            case LineKind::Generator: ++c.generators; break;
            case LineKind::Tangent: ++c.tangents; break;
            case LineKind::Secant: ++c.secants; break;
        }
    }
    return c;
}

std::string HermitianSurface::line_census_text(int max_points) const {
    std::string out;
    int shown = 0;
    for (int p : points_) {
        if (max_points >= 0 && shown >= max_points) break;
        const LineCensus c = line_census_at(p);
        out += "point " + std::to_string(p) + " (" + g_->point_string(p) + "): generators=" +
               std::to_string(c.generators) + " tangents=" + std::to_string(c.tangents) +
               " secants=" + std::to_string(c.secants) + "\n";
        ++shown;
    }
    return out;
}

}  // namespace hermicode
