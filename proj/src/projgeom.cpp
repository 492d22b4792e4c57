#include "hermicode/projgeom.hpp"

#include <algorithm>
#include <string>

namespace hermicode {

std::array<int, 4> Geometry::normalize(std::array<int, 4> v) const {
    const Field& F = *f_;
    for (int i = 0; i < 4; ++i) {
        if (v[i] != 0) {
            if (v[i] != 1) {
                const int s = F.invu(v[i]);
                for (int j = i; j < 4; ++j) v[j] = F.mulu(s, v[j]);
            }
            return v;
        }
    }
    throw std::invalid_argument("cannot normalize the zero vector");
}

int Geometry::point_index(const std::array<int, 4>& coords) const {
    const int idx = point_by_code_[code_of(normalize(coords))];
    if (idx < 0) throw std::logic_error("normalized point missing from index");
    return idx;
}

int Geometry::plane_index(const std::array<int, 4>& coeffs) const {
    const int idx = plane_by_code_[code_of(normalize(coeffs))];
    if (idx < 0) throw std::logic_error("normalized plane missing from index");
    return idx;
}

int Geometry::pairing(const std::array<int, 4>& coeffs, const std::array<int, 4>& coords) const {
    const Field& F = *f_;
    int acc = 0;
    for (int i = 0; i < 4; ++i) acc = F.addu(acc, F.mulu(coeffs[i], coords[i]));
    return acc;
}

Geometry::Geometry(const Field& f) : f_(&f), q_(f.q()) {
    // Dense point/line/pair tables keep incidence O(1) but grow as q^4;
    // beyond q = 16 they stop fitting sensibly in memory.
    if (q_ > 16) throw std::invalid_argument("PG(3,q) tables are built densely; q > 16 is unsupported");
    // Points in increasing lexicographic order of their coordinate tuples.
    // Normalized representatives with leading position i sort by block:
    // (0,0,0,1) first, then (0,0,1,*), (0,1,*,*), (1,*,*,*).
    const long long q4 = static_cast<long long>(q_) * q_ * q_ * q_;
    point_by_code_.assign(static_cast<size_t>(q4), -1);
    for (int lead = 3; lead >= 0; --lead) {
        long long combos = 1;
        for (int i = lead + 1; i < 4; ++i) combos *= q_;
        for (long long c = 0; c < combos; ++c) {
            std::array<int, 4> v{0, 0, 0, 0};
            v[lead] = 1;
            long long rest = c;
            for (int i = 3; i > lead; --i) {
                v[i] = static_cast<int>(rest % q_);
                rest /= q_;
            }
            point_by_code_[code_of(v)] = static_cast<int>(pts_.size());
            pts_.push_back(v);
        }
    }
    const int n = static_cast<int>(pts_.size());

    // Lines, deduplicated through the pair table.
    line_by_pair_.assign(static_cast<size_t>(n) * n, -1);
    const Field& F = *f_;
    for (int p1 = 0; p1 < n; ++p1) {
        for (int p2 = p1 + 1; p2 < n; ++p2) {
            if (line_by_pair_[static_cast<size_t>(p1) * n + p2] >= 0) continue;
            Line l;
            l.span = {p1, p2};
            l.points.reserve(q_ + 1);
            l.points.push_back(p2);
            const auto& a = pts_[p1];
            const auto& b = pts_[p2];
            for (int lam = 0; lam < q_; ++lam) {
                std::array<int, 4> v;
                for (int i = 0; i < 4; ++i) v[i] = F.addu(a[i], F.mulu(lam, b[i]));
                l.points.push_back(point_by_code_[code_of(normalize(v))]);
            }
            std::sort(l.points.begin(), l.points.end());
            if (static_cast<int>(l.points.size()) != q_ + 1 ||
                std::adjacent_find(l.points.begin(), l.points.end()) != l.points.end())
                throw std::logic_error("line does not have q+1 distinct points");
            l.mask = PointMask(n);
            for (int p : l.points) l.mask.set(p);
            const int id = static_cast<int>(lines_.size());
            for (int u : l.points)
                for (int v : l.points)
                    if (u != v) line_by_pair_[static_cast<size_t>(u) * n + v] = id;
            lines_.push_back(std::move(l));
        }
    }

    lines_by_point_.assign(n, {});
    for (int id = 0; id < static_cast<int>(lines_.size()); ++id)
        for (int p : lines_[id].points) lines_by_point_[p].push_back(id);

    // Planes: one normalized dual tuple per plane, same enumeration order.
    plane_by_code_.assign(static_cast<size_t>(q4), -1);
    planes_by_point_.assign(n, {});
    for (int lead = 3; lead >= 0; --lead) {
        long long combos = 1;
        for (int i = lead + 1; i < 4; ++i) combos *= q_;
        for (long long c = 0; c < combos; ++c) {
            std::array<int, 4> h{0, 0, 0, 0};
            h[lead] = 1;
            long long rest = c;
            for (int i = 3; i > lead; --i) {
                h[i] = static_cast<int>(rest % q_);
                rest /= q_;
            }
            Plane pl;
            pl.coeffs = h;
            pl.mask = PointMask(n);
            for (int p = 0; p < n; ++p) {
                if (pairing(h, pts_[p]) == 0) {
                    pl.points.push_back(p);
                    pl.mask.set(p);
                }
            }
            if (static_cast<int>(pl.points.size()) != q_ * q_ + q_ + 1)
                throw std::logic_error("plane does not have q^2+q+1 points");
            const int id = static_cast<int>(planes_.size());
            plane_by_code_[code_of(h)] = id;
            for (int p : pl.points) planes_by_point_[p].push_back(id);
            planes_.push_back(std::move(pl));
        }
    }
}

int Geometry::line_through(int p1, int p2) const {
    if (p1 == p2) throw std::invalid_argument("line_through requires two distinct points");
    return line_by_pair_[static_cast<size_t>(p1) * pts_.size() + p2];
}

std::vector<int> Geometry::planes_through_line(int line_id) const {
    const Line& l = lines_[line_id];
    std::vector<int> out;
    for (int pid : planes_by_point_[l.span[0]])
        if (planes_[pid].mask.test(l.span[1])) out.push_back(pid);
    if (static_cast<int>(out.size()) != q_ + 1)
        throw std::logic_error("expected q+1 planes through a line");
    return out;
}

bool Geometry::skew(int l1, int l2) const {
    if (l1 == l2) return false;
    return !lines_[l1].mask.intersects(lines_[l2].mask);
}

Regulus Geometry::transversals(int l1, int l2, int l3) const {
    if (!skew(l1, l2) || !skew(l1, l3) || !skew(l2, l3))
        throw std::invalid_argument("transversals require three pairwise skew lines");
    const int n = num_points();
    Regulus r;
    for (int p : lines_[l1].points) {
        int found = -1;
        for (int s : lines_[l2].points) {
            const int cand = line_by_pair_[static_cast<size_t>(p) * n + s];
            if (lines_[cand].mask.intersects(lines_[l3].mask)) {
                if (found >= 0 && found != cand)
                    throw std::logic_error("more than one transversal through a point");
                found = cand;
            }
        }
        if (found < 0) throw std::logic_error("no transversal through a point of the first line");
        r.lines.push_back(found);
    }
    std::sort(r.lines.begin(), r.lines.end());
    if (static_cast<int>(r.lines.size()) != q_ + 1 ||
        std::adjacent_find(r.lines.begin(), r.lines.end()) != r.lines.end())
        throw std::logic_error("expected q+1 distinct transversals");
    for (size_t i = 0; i < r.lines.size(); ++i)
        for (size_t j = i + 1; j < r.lines.size(); ++j)
            if (!skew(r.lines[i], r.lines[j])) throw std::logic_error("transversals are not pairwise skew");
    return r;
}

Regulus Geometry::complementary_regulus(const Regulus& r) const {
    if (r.lines.size() < 3) throw std::invalid_argument("regulus needs at least three lines");
    Regulus c = transversals(r.lines[0], r.lines[1], r.lines[2]);
    for (int lc : c.lines)
        for (int lr : r.lines)
            if (lines_[lc].mask.and_count(lines_[lr].mask) != 1)
                throw std::logic_error("complementary regulus line must meet every regulus line once");
    return c;
}

std::string Geometry::point_string(int i) const {
    const auto& v = pts_[i];
    std::string s;
    for (int j = 0; j < 4; ++j) {
        if (j) s += ':';
        s += std::to_string(v[j]);
    }
    return s;
}

std::string Geometry::plane_string(int id) const {
    const auto& h = planes_[id].coeffs;
    std::string s = "[";
    for (int j = 0; j < 4; ++j) {
        if (j) s += ',';
        s += std::to_string(h[j]);
    }
    s += ']';
    return s;
}

}  // namespace hermicode
