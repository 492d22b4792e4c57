// Quadratic forms on four variables over GF(q), their zero sets in PG(3,q),
// and classification into the six projective orbits (repeated plane, plane
// pair, line, cone, hyperbolic, elliptic).
//
// Classification works by geometric fingerprint (point count plus
// collinearity/coplanarity) rather than matrix rank: in characteristic 2 the
// associated bilinear form is alternating and symmetric-matrix rank
// misidentifies orbits, while the fingerprint is characteristic-independent
// and exhaustively checkable.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "hermicode/projgeom.hpp"

namespace hermicode {

// Coefficients c_ij for 0 <= i <= j <= 3 in the fixed order
// c00,c01,c02,c03,c11,c12,c13,c22,c23,c33; f = sum c_ij x_i x_j.
struct QuadraticForm {
    std::array<int, 10> c{};

    bool is_zero() const noexcept {
        for (int v : c)
            if (v) return false;
        return true;
    }
    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
    friend auto operator<=>(const QuadraticForm&, const QuadraticForm&) = default;
};

inline constexpr std::array<std::array<int, 2>, 10> kQuadMonomialPairs{
    {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};

enum class QuadricClass : uint8_t { RepeatedPlane, PlanePair, LinePoints, Cone, Hyperbolic, Elliptic };

// Rank per orbit: 1, 2, 2, 3, 4, 4.
int quadric_rank(QuadricClass c) noexcept;
const char* quadric_class_name(QuadricClass c) noexcept;

// Expected zero-set size of each orbit in PG(3,q).
long long quadric_class_size(QuadricClass c, int q) noexcept;

// Value of f at the normalized representative of a point. Representatives
// have leading coordinate 1, so this matches evaluation of any degree-2
// form on the canonical affine lift.
int evaluate(const Geometry& g, const QuadraticForm& f, int point_id);

struct ZeroSet {
    std::vector<int> points;  // sorted point ids
    PointMask mask;
};
ZeroSet zero_set(const Geometry& g, const QuadraticForm& f);

QuadricClass classify(const Geometry& g, const QuadraticForm& f);

// Scales a nonzero form so its first nonzero coefficient equals 1.
QuadraticForm normalize_form(const Field& F, const QuadraticForm& f);

// The 10-coefficient expansion of (sum a_i x_i)(sum b_j x_j).
QuadraticForm product_of_planes(const Field& F, const std::array<int, 4>& a, const std::array<int, 4>& b);

// Row-reduced basis of the space of quadratic forms vanishing on all the
// given points. Deterministic pivoting: first nonzero column, smallest row.
std::vector<QuadraticForm> fit_forms(const Geometry& g, std::span<const int> point_ids);

// Points P of Z(f) such that every line joining P to another point of Z(f)
// lies inside Z(f); nonempty exactly for the degenerate orbits.
std::vector<int> singular_points(const Geometry& g, const QuadraticForm& f);

// Per-point table of the 10 quadratic monomial values, the hot path of
// every weight or census sweep.
class QuadricEvaluator {
public:
    // Table over all points of PG(3,q).
    explicit QuadricEvaluator(const Geometry& g);
    // Table over a chosen point subset (e.g. the points of a surface).
    QuadricEvaluator(const Geometry& g, std::span<const int> point_ids);

    int num_rows() const noexcept { return static_cast<int>(vals_.size()); }
    const Field& field() const noexcept { return *f_; }

    int eval_row(const QuadraticForm& f, int row) const noexcept {
        const auto& v = vals_[row];
        int acc = 0;
        for (int m = 0; m < 10; ++m) {
            const int cm = f.c[m];
            if (cm) acc = F_add(acc, F_mul(cm, v[m]));
        }
        return acc;
    }

    // Number of rows where f vanishes.
    int zero_count(const QuadraticForm& f) const noexcept {
        int z = 0;
        for (int r = 0; r < num_rows(); ++r) z += (eval_row(f, r) == 0);
        return z;
    }

    // Bitmask over rows; `out` must be sized to num_rows().
    void zero_mask(const QuadraticForm& f, PointMask& out) const noexcept {
        out.reset();
        for (int r = 0; r < num_rows(); ++r)
            if (eval_row(f, r) == 0) out.set(r);
    }

private:
    int F_add(int x, int y) const noexcept {
        return xor_add_ ? (x ^ y) : add_tab_[static_cast<size_t>(x) * q_ + y];
    }
    int F_mul(int x, int y) const noexcept { return (x && y) ? exp_[log_[x] + log_[y]] : 0; }
    void build(const Geometry& g, std::span<const int> point_ids);

    const Field* f_ = nullptr;
    int q_ = 0;
    bool xor_add_ = false;
    const int* log_ = nullptr;
    const int* exp_ = nullptr;
    const int* add_tab_ = nullptr;
    std::vector<std::array<int, 10>> vals_;
};

}  // namespace hermicode
