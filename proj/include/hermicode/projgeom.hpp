// Points, lines, planes, incidence and reguli of PG(3,q).
//
// Points are stored as normalized representatives (leftmost nonzero
// coordinate equals 1) in global lexicographic order of their coordinate
// codes; that order fixes generator-matrix columns and every other export.
// Lines and planes carry sorted point-index lists plus membership bitmasks
// so that incidence and skewness tests in enumeration loops reduce to a few
// word operations.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "hermicode/gf.hpp"

namespace hermicode {

// Bitmask over the point set of PG(3,q).
class PointMask {
public:
    PointMask() = default;
    explicit PointMask(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    void set(int i) noexcept { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear(int i) noexcept { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1; }
    void reset() noexcept { std::fill(w_.begin(), w_.end(), 0); }
    int size() const noexcept { return bits_; }

    int count() const noexcept {
        int c = 0;
        for (uint64_t v : w_) c += std::popcount(v);
        return c;
    }
    int and_count(const PointMask& o) const noexcept {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool intersects(const PointMask& o) const noexcept {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const PointMask& o) const noexcept {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool none() const noexcept {
        for (uint64_t v : w_)
            if (v) return false;
        return true;
    }

    friend bool operator==(const PointMask& a, const PointMask& b) noexcept {
        return a.bits_ == b.bits_ && a.w_ == b.w_;
    }
    const std::vector<uint64_t>& words() const noexcept { return w_; }

private:
    int bits_ = 0;
    std::vector<uint64_t> w_;
};

// A regulus: q+1 mutually skew lines (the transversals of three skew lines).
struct Regulus {
    std::vector<int> lines;  // line ids, sorted
};

class Geometry {
public:
    struct Line {
        std::array<int, 2> span;  // indices of a spanning point pair
        std::vector<int> points;  // the q+1 point indices, sorted
        PointMask mask;
    };
    struct Plane {
        std::array<int, 4> coeffs;  // dual coordinates, leftmost nonzero = 1
        std::vector<int> points;    // the q^2+q+1 point indices, sorted
        PointMask mask;
    };

    explicit Geometry(const Field& f);

    const Field& field() const noexcept { return *f_; }
    int q() const noexcept { return q_; }
    int num_points() const noexcept { return static_cast<int>(pts_.size()); }
    int num_lines() const noexcept { return static_cast<int>(lines_.size()); }
    int num_planes() const noexcept { return static_cast<int>(planes_.size()); }

    const std::array<int, 4>& point(int i) const { return pts_[i]; }
    const Line& line(int id) const { return lines_[id]; }
    const Plane& plane(int id) const { return planes_[id]; }

    // nu-normalization: scales so the leftmost nonzero coordinate equals 1.
    std::array<int, 4> normalize(std::array<int, 4> v) const;
    int point_index(const std::array<int, 4>& coords) const;  // normalizes first
    int plane_index(const std::array<int, 4>& coeffs) const;

    // Id of the unique line through two distinct points.
    int line_through(int p1, int p2) const;
    int line_through_unchecked(int p1, int p2) const noexcept {
        return line_by_pair_[static_cast<size_t>(p1) * pts_.size() + p2];
    }

    const std::vector<int>& planes_through_point(int p) const { return planes_by_point_[p]; }
    const std::vector<int>& lines_through_point(int p) const { return lines_by_point_[p]; }
    std::vector<int> plane_points(int plane_id) const { return planes_[plane_id].points; }
    std::vector<int> planes_through_line(int line_id) const;  // the q+1 plane ids

    bool incident(int plane_id, int point_id) const { return planes_[plane_id].mask.test(point_id); }
    bool skew(int l1, int l2) const;

    // The q+1 pairwise skew transversals of three pairwise skew lines.
    Regulus transversals(int l1, int l2, int l3) const;
    Regulus complementary_regulus(const Regulus& r) const;

    // Value of the dual form of a plane at a point (not necessarily on it).
    int pairing(const std::array<int, 4>& coeffs, const std::array<int, 4>& coords) const;

    std::string point_string(int i) const;   // "x0:x1:x2:x3"
    std::string plane_string(int id) const;  // "[c0,c1,c2,c3]"

private:
    int code_of(const std::array<int, 4>& v) const noexcept {
        return ((v[0] * q_ + v[1]) * q_ + v[2]) * q_ + v[3];
    }

    const Field* f_;
    int q_;
    std::vector<std::array<int, 4>> pts_;
    std::vector<int> point_by_code_;  // dense, indexed by coordinate code; -1 when not a representative
    std::vector<Line> lines_;
    std::vector<int32_t> line_by_pair_;  // num_points^2, -1 on the diagonal
    std::vector<Plane> planes_;
    std::vector<int> plane_by_code_;
    std::vector<std::vector<int>> planes_by_point_;
    std::vector<std::vector<int>> lines_by_point_;
};

}  // namespace hermicode
