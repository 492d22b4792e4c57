// The functional code of degree-h forms evaluated at the points of the
// Hermitian surface: generator matrix, codewords, and weight distributions
// (exhaustive over projective representatives, or seeded sampling).

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hermicode/hermitian.hpp"
#include "hermicode/sweep.hpp"

namespace hermicode {

// Exponent vectors (e0,e1,e2,e3) with sum h, in graded-lexicographic order
// (largest exponent tuple first). For h=2 this matches the quadratic-form
// coefficient order c00,c01,...,c33.
struct MonomialBasis {
    int h = 0;
    std::vector<std::array<int, 4>> exponents;
    int size() const noexcept { return static_cast<int>(exponents.size()); }
};
MonomialBasis monomial_basis(int h);

long long binomial(int n, int k);

class GeneratorMatrix {
public:
    // Row per basis monomial, column per surface point in global order;
    // entries are monomial values at the normalized representatives. For
    // h <= t the matrix must have full row rank (the evaluation map is
    // injective there); a deficiency raises an invariant violation.
    GeneratorMatrix(const HermitianSurface& X, int h);

    const HermitianSurface& surface() const noexcept { return *X_; }
    const MonomialBasis& basis() const noexcept { return basis_; }
    int n() const noexcept { return n_; }
    int k() const noexcept { return basis_.size(); }
    int rank() const noexcept { return rank_; }
    int dim() const noexcept { return rank_; }  // = k when h <= t
    int h() const noexcept { return basis_.h; }
    int t() const noexcept { return X_->t(); }
    int q() const noexcept { return X_->geometry().q(); }

    int entry(int row, int col) const { return rows_[row][col]; }
    // The k monomial values at surface point `col` (the matrix column).
    const int* column(int col) const noexcept { return col_vals_.data() + static_cast<size_t>(col) * k(); }

    // coeffs x matrix, as a combination of matrix rows.
    std::vector<int> codeword(std::span<const int> coeffs) const;
    static int weight(std::span<const int> word) noexcept;

    // Text export: "q=<q> k=<k> n=<n>" then k rows of n element codes.
    std::string export_text() const;

private:
    const HermitianSurface* X_;
    MonomialBasis basis_;
    int n_ = 0;
    int rank_ = 0;
    std::vector<std::vector<int>> rows_;
    std::vector<int> col_vals_;  // n * k, column-major per point
};

enum class SweepMode : uint8_t { Exhaustive, Sampled };

struct WeightDistribution {
    int t = 0, h = 0, n = 0, k = 0, q = 0;
    SweepMode mode = SweepMode::Exhaustive;
    uint64_t samples = 0;  // sampled mode only
    uint64_t seed = 0;     // sampled mode only
    std::vector<uint64_t> counts;  // index = weight, size n+1

    uint64_t total_words() const noexcept {
        uint64_t s = 0;
        for (uint64_t c : counts) s += c;
        return s;
    }
    int min_distance() const;   // smallest nonzero weight present
    int second_weight() const;  // smallest weight above the minimum
};

// Iterates one representative per projective coefficient class and scales
// nonzero-weight counts by q-1; the zero word is added explicitly. Requires
// full rank (so representatives hit distinct codewords) and, beyond a size
// threshold, an explicit acknowledgment that the sweep is large.
WeightDistribution weight_distribution_exhaustive(const GeneratorMatrix& G, int workers,
                                                  bool allow_large = false);

// Empirical distribution of `samples` seeded uniform draws over nonzero
// coefficient vectors; reported counts are per-sample, never merged with
// exhaustive results.
WeightDistribution weight_distribution_sampled(const GeneratorMatrix& G, uint64_t samples,
                                               uint64_t seed, int workers);

// Representative sweeps beyond this many classes need allow_large = true.
inline constexpr uint64_t kLargeSweepThreshold = 10'000'000;

std::string weight_report_json(const WeightDistribution& d);

}  // namespace hermicode
