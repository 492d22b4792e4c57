#include "hermicode/quadric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hermicode {

int quadric_rank(QuadricClass c) noexcept {
    switch (c) {
        case QuadricClass::RepeatedPlane: return 1;
        case QuadricClass::PlanePair: return 2;
        case QuadricClass::LinePoints: return 2;
        case QuadricClass::Cone: return 3;
        case QuadricClass::Hyperbolic: return 4;
        case QuadricClass::Elliptic: return 4;
    }
    return 0;
}

const char* quadric_class_name(QuadricClass c) noexcept {
    switch (c) {
        case QuadricClass::RepeatedPlane: return "repeated-plane";
        case QuadricClass::PlanePair: return "plane-pair";
        case QuadricClass::LinePoints: return "line";
        case QuadricClass::Cone: return "cone";
        case QuadricClass::Hyperbolic: return "hyperbolic";
        case QuadricClass::Elliptic: return "elliptic";
    }
    return "?";
}

long long quadric_class_size(QuadricClass c, int q) noexcept {
    const long long Q = q;
    switch (c) {
        case QuadricClass::RepeatedPlane: return Q * Q + Q + 1;
        case QuadricClass::PlanePair: return 2 * Q * Q + Q + 1;
        case QuadricClass::LinePoints: return Q + 1;
        case QuadricClass::Cone: return Q * Q + Q + 1;
        case QuadricClass::Hyperbolic: return (Q + 1) * (Q + 1);
        case QuadricClass::Elliptic: return Q * Q + 1;
    }
    return -1;
}

int evaluate(const Geometry& g, const QuadraticForm& f, int point_id) {
    const Field& F = g.field();
    const auto& v = g.point(point_id);
    int acc = 0;
    for (int m = 0; m < 10; ++m) {
        if (f.c[m] == 0) continue;
        const auto [i, j] = kQuadMonomialPairs[m];
        acc = F.addu(acc, F.mulu(f.c[m], F.mulu(v[i], v[j])));
    }
    return acc;
}

ZeroSet zero_set(const Geometry& g, const QuadraticForm& f) {
    if (f.is_zero()) throw std::invalid_argument("zero form has no well-defined zero set");
    ZeroSet z;
    z.mask = PointMask(g.num_points());
    for (int p = 0; p < g.num_points(); ++p) {
        if (evaluate(g, f, p) == 0) {
            z.points.push_back(p);
            z.mask.set(p);
        }
    }
    return z;
}

QuadraticForm normalize_form(const Field& F, const QuadraticForm& f) {
    for (int m = 0; m < 10; ++m) {
        if (f.c[m] != 0) {
            if (f.c[m] == 1) return f;
            QuadraticForm out;
            const int s = F.invu(f.c[m]);
            for (int i = 0; i < 10; ++i) out.c[i] = F.mulu(s, f.c[i]);
            return out;
        }
    }
    throw std::invalid_argument("cannot normalize the zero form");
}

QuadraticForm product_of_planes(const Field& F, const std::array<int, 4>& a, const std::array<int, 4>& b) {
    QuadraticForm f;
    for (int m = 0; m < 10; ++m) {
        const auto [i, j] = kQuadMonomialPairs[m];
        if (i == j)
            f.c[m] = F.mulu(a[i], b[i]);
        else
            f.c[m] = F.addu(F.mulu(a[i], b[j]), F.mulu(a[j], b[i]));
    }
    return f;
}

namespace {

// Projective rank of the span of a point set: 2 = collinear, 3 = coplanar.
int span_rank(const Geometry& g, const std::vector<int>& point_ids) {
    const Field& F = g.field();
    // One echelon row per pivot position, pivot entry normalized to 1.
    std::array<std::array<int, 4>, 4> rows{};
    std::array<bool, 4> used{};
    int rank = 0;
    for (int p : point_ids) {
        std::array<int, 4> v = g.point(p);
        for (int lead = 0; lead < 4; ++lead) {
            if (v[lead] == 0) continue;
            if (used[lead]) {
                const int s = v[lead];
                for (int i = lead; i < 4; ++i) v[i] = F.subu(v[i], F.mulu(s, rows[lead][i]));
            } else {
                const int inv = F.invu(v[lead]);
                for (int i = lead; i < 4; ++i) v[i] = F.mulu(inv, v[i]);
                rows[lead] = v;
                used[lead] = true;
                ++rank;
                break;
            }
        }
        if (rank == 4) return 4;
    }
    return rank;
}

}  // namespace

QuadricClass classify(const Geometry& g, const QuadraticForm& f) {
    const ZeroSet z = zero_set(g, f);
    const int q = g.q();
    const long long n0 = static_cast<long long>(z.points.size());

    if (n0 == quadric_class_size(QuadricClass::LinePoints, q)) {
        const int l = g.line_through(z.points[0], z.points[1]);
        if (g.line(l).mask == z.mask) return QuadricClass::LinePoints;
        throw std::logic_error("q+1 zeros that are not collinear");
    }
    if (n0 == quadric_class_size(QuadricClass::Elliptic, q)) return QuadricClass::Elliptic;
    if (n0 == quadric_class_size(QuadricClass::Hyperbolic, q)) return QuadricClass::Hyperbolic;
    if (n0 == quadric_class_size(QuadricClass::PlanePair, q)) return QuadricClass::PlanePair;
    if (n0 == quadric_class_size(QuadricClass::RepeatedPlane, q))
        return span_rank(g, z.points) == 3 ? QuadricClass::RepeatedPlane : QuadricClass::Cone;
    throw std::logic_error("unclassifiable zero-set size " + std::to_string(n0));
}

std::vector<QuadraticForm> fit_forms(const Geometry& g, std::span<const int> point_ids) {
    if (point_ids.empty()) throw std::invalid_argument("fit_forms needs at least one point");
    const Field& F = g.field();

    // Evaluation system: one row of 10 monomial values per point.
    std::vector<std::array<int, 10>> rows;
    rows.reserve(point_ids.size());
    for (int p : point_ids) {
        const auto& v = g.point(p);
        std::array<int, 10> r;
        for (int m = 0; m < 10; ++m) {
            const auto [i, j] = kQuadMonomialPairs[m];
            r[m] = F.mulu(v[i], v[j]);
        }
        rows.push_back(r);
    }

    // Row echelon form; pivot on the first nonzero column, smallest row.
    std::vector<int> pivot_col;
    size_t rank_rows = 0;
    for (int col = 0; col < 10 && rank_rows < rows.size(); ++col) {
        size_t sel = rank_rows;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank_rows], rows[sel]);
        const int invp = F.invu(rows[rank_rows][col]);
        for (int m = col; m < 10; ++m) rows[rank_rows][m] = F.mulu(invp, rows[rank_rows][m]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank_rows || rows[r][col] == 0) continue;
            const int s = rows[r][col];
            for (int m = col; m < 10; ++m) rows[r][m] = F.subu(rows[r][m], F.mulu(s, rows[rank_rows][m]));
        }
        pivot_col.push_back(col);
        ++rank_rows;
    }

    // Null-space basis: one vector per free column, free columns ascending.
    std::vector<QuadraticForm> basis;
    std::array<bool, 10> is_pivot{};
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < 10; ++free) {
        if (is_pivot[free]) continue;
        QuadraticForm v;
        v.c[free] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v.c[pivot_col[r]] = F.negu(rows[r][free]);
        basis.push_back(v);
    }
    return basis;
}

std::vector<int> singular_points(const Geometry& g, const QuadraticForm& f) {
    const ZeroSet z = zero_set(g, f);
    std::vector<int> out;
    for (int p : z.points) {
        bool singular = true;
        for (int s : z.points) {
            if (s == p) continue;
            const int l = g.line_through_unchecked(p, s);
            bool contained = true;
            for (int lp : g.line(l).points) {
                if (!z.mask.test(lp)) {
                    contained = false;
                    break;
                }
            }
            if (!contained) {
                singular = false;
                break;
            }
        }
        if (singular) out.push_back(p);
    }
    return out;
}

void QuadricEvaluator::build(const Geometry& g, std::span<const int> point_ids) {
    const Field& F = g.field();
    f_ = &F;
    q_ = F.q();
    xor_add_ = (F.p() == 2);
    log_ = F.log_table();
    exp_ = F.exp_table();
    add_tab_ = F.add_table();
    vals_.reserve(point_ids.size());
    for (int p : point_ids) {
        const auto& v = g.point(p);
        std::array<int, 10> row;
        for (int m = 0; m < 10; ++m) {
            const auto [i, j] = kQuadMonomialPairs[m];
            row[m] = F.mulu(v[i], v[j]);
        }
        vals_.push_back(row);
    }
}

QuadricEvaluator::QuadricEvaluator(const Geometry& g) {
    std::vector<int> all(g.num_points());
    for (int i = 0; i < g.num_points(); ++i) all[i] = i;
    build(g, all);
}

QuadricEvaluator::QuadricEvaluator(const Geometry& g, std::span<const int> point_ids) {
    build(g, point_ids);
}

}  // namespace hermicode
