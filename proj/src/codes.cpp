#include "hermicode/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermicode/version.hpp"

namespace hermicode {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

MonomialBasis monomial_basis(int h) {
    if (h < 1) throw std::invalid_argument("degree must be at least 1");
    MonomialBasis b;
    b.h = h;
    for (int e0 = h; e0 >= 0; --e0)
        for (int e1 = h - e0; e1 >= 0; --e1)
            for (int e2 = h - e0 - e1; e2 >= 0; --e2)
                b.exponents.push_back({e0, e1, e2, h - e0 - e1 - e2});
    if (b.size() != binomial(3 + h, h)) throw std::logic_error("monomial basis has wrong size");
    return b;
}

GeneratorMatrix::GeneratorMatrix(const HermitianSurface& X, int h)
    : X_(&X), basis_(monomial_basis(h)) {
    if (basis_.size() > kMaxSweepCoeffs)
        throw std::invalid_argument("degree too large for sweep machinery");
    const Geometry& g = X.geometry();
    const Field& F = g.field();
    n_ = X.size();

    rows_.assign(k(), std::vector<int>(n_, 0));
    col_vals_.assign(static_cast<size_t>(n_) * k(), 0);
    for (int col = 0; col < n_; ++col) {
        const auto& v = g.point(X.points()[col]);
        for (int m = 0; m < k(); ++m) {
            const auto& e = basis_.exponents[m];
            int val = 1;
            for (int i = 0; i < 4; ++i)
                if (e[i]) val = F.mulu(val, F.pow(v[i], e[i]));
            rows_[m][col] = val;
            col_vals_[static_cast<size_t>(col) * k() + m] = val;
        }
    }

    // Row rank over GF(q).
    auto work = rows_;
    int rank = 0;
    for (int col = 0; col < n_ && rank < k(); ++col) {
        int sel = -1;
        for (int r = rank; r < k(); ++r)
            if (work[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(work[rank], work[sel]);
        const int inv = F.invu(work[rank][col]);
        for (int c = col; c < n_; ++c) work[rank][c] = F.mulu(inv, work[rank][c]);
        for (int r = 0; r < k(); ++r) {
            if (r == rank || work[r][col] == 0) continue;
            const int s = work[r][col];
            for (int c = col; c < n_; ++c) work[r][c] = F.subu(work[r][c], F.mulu(s, work[rank][c]));
        }
        ++rank;
    }
    rank_ = rank;
    if (h <= X.t() && rank_ != k())
        throw std::logic_error("evaluation map is not injective in the h <= t regime");
}

std::vector<int> GeneratorMatrix::codeword(std::span<const int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != k())
        throw std::invalid_argument("coefficient vector length must equal the monomial count");
    const Field& F = X_->geometry().field();
    std::vector<int> word(n_, 0);
    for (int m = 0; m < k(); ++m) {
        const int cm = coeffs[m];
        if (cm == 0) continue;
        const auto& row = rows_[m];
        for (int j = 0; j < n_; ++j) word[j] = F.addu(word[j], F.mulu(cm, row[j]));
    }
    return word;
}

int GeneratorMatrix::weight(std::span<const int> word) noexcept {
    int w = 0;
    for (int x : word) w += (x != 0);
    return w;
}

std::string GeneratorMatrix::export_text() const {
    std::string out = "q=" + std::to_string(q()) + " k=" + std::to_string(k()) +
                      " n=" + std::to_string(n_) + "\n";
    for (int m = 0; m < k(); ++m) {
        for (int j = 0; j < n_; ++j) {
            if (j) out += ' ';
            out += std::to_string(rows_[m][j]);
        }
        out += '\n';
    }
    return out;
}

int WeightDistribution::min_distance() const {
    for (int w = 1; w <= n; ++w)
        if (counts[w]) return w;
    throw std::domain_error("distribution contains only the zero word");
}

int WeightDistribution::second_weight() const {
    const int d = min_distance();
    for (int w = d + 1; w <= n; ++w)
        if (counts[w]) return w;
    throw std::domain_error("distribution has a single nonzero weight");
}

namespace {

// Weight of the word for lead-normalized coefficients: count of points
// where 1*vals[lead] + sum_{m>lead} c_m*vals[m] is nonzero.
struct SweepKernel {
    const int* col_vals;  // n * k
    int n, k, q;
    bool xor_add;
    const int* log_tab;
    const int* exp_tab;
    const int* add_tab;

    explicit SweepKernel(const GeneratorMatrix& G)
        : col_vals(G.column(0)), n(G.n()), k(G.k()), q(G.q()) {
        const Field& F = G.surface().geometry().field();
        xor_add = (F.p() == 2);
        log_tab = F.log_table();
        exp_tab = F.exp_table();
        add_tab = F.add_table();
    }

    int fadd(int x, int y) const noexcept {
        return xor_add ? (x ^ y) : add_tab[static_cast<size_t>(x) * q + y];
    }
    int fmul(int x, int y) const noexcept { return (x && y) ? exp_tab[log_tab[x] + log_tab[y]] : 0; }

    int weight_of(const std::array<int, kMaxSweepCoeffs>& c, int lead) const noexcept {
        int w = 0;
        const int* v = col_vals;
        for (int j = 0; j < n; ++j, v += k) {
            int acc = v[lead];
            for (int m = lead + 1; m < k; ++m)
                if (c[m]) acc = fadd(acc, fmul(c[m], v[m]));
            w += (acc != 0);
        }
        return w;
    }

    int weight_of_general(const std::array<int, kMaxSweepCoeffs>& c) const noexcept {
        int w = 0;
        const int* v = col_vals;
        for (int j = 0; j < n; ++j, v += k) {
            int acc = 0;
            for (int m = 0; m < k; ++m)
                if (c[m]) acc = fadd(acc, fmul(c[m], v[m]));
            w += (acc != 0);
        }
        return w;
    }
};

}  // namespace

WeightDistribution weight_distribution_exhaustive(const GeneratorMatrix& G, int workers,
                                                  bool allow_large) {
    if (G.rank() != G.k())
        throw std::invalid_argument(
            "exhaustive distribution requires an injective evaluation map (h <= t)");
    const uint64_t reps = projective_rep_count(G.q(), G.k());
    if (reps > kLargeSweepThreshold && !allow_large)
        throw std::runtime_error("exhaustive sweep of " + std::to_string(reps) +
                                 " representatives exceeds the default budget; pass the "
                                 "acknowledgment flag to run it");

    WeightDistribution d;
    d.t = G.t();
    d.h = G.h();
    d.n = G.n();
    d.k = G.dim();
    d.q = G.q();
    d.mode = SweepMode::Exhaustive;
    d.counts.assign(G.n() + 1, 0);

    const SweepKernel kern(G);
    std::vector<std::vector<uint64_t>> partial(workers < 1 ? 1 : workers);
    std::vector<uint8_t> saw_zero_weight(partial.size(), 0);
    parallel_ranges(reps, static_cast<int>(partial.size()), [&](int w, uint64_t begin, uint64_t end) {
        std::vector<uint64_t> counts(G.n() + 1, 0);
        RepCursor cur(G.q(), G.k(), begin);
        for (uint64_t i = begin; i < end; ++i, cur.next()) {
            const int wt = kern.weight_of(cur.coeffs(), cur.lead());
            ++counts[wt];
            if (wt == 0) saw_zero_weight[w] = 1;
        }
        partial[w] = std::move(counts);
    });
    for (const auto& counts : partial)
        if (!counts.empty())
            for (int i = 0; i <= G.n(); ++i) d.counts[i] += counts[i];
    for (uint8_t flag : saw_zero_weight)
        if (flag) throw std::logic_error("nonzero coefficients produced the zero codeword");

    for (int i = 0; i <= G.n(); ++i) d.counts[i] *= static_cast<uint64_t>(G.q() - 1);
    d.counts[0] = 1;
    return d;
}

WeightDistribution weight_distribution_sampled(const GeneratorMatrix& G, uint64_t samples,
                                               uint64_t seed, int workers) {
    WeightDistribution d;
    d.t = G.t();
    d.h = G.h();
    d.n = G.n();
    d.k = G.dim();
    d.q = G.q();
    d.mode = SweepMode::Sampled;
    d.samples = samples;
    d.seed = seed;
    d.counts.assign(G.n() + 1, 0);

    const SweepKernel kern(G);
    std::vector<std::vector<uint64_t>> partial(workers < 1 ? 1 : workers);
    parallel_ranges(samples, static_cast<int>(partial.size()), [&](int w, uint64_t begin, uint64_t end) {
        std::vector<uint64_t> counts(G.n() + 1, 0);
        std::array<int, kMaxSweepCoeffs> c{};
        for (uint64_t i = begin; i < end; ++i) {
            sample_nonzero_vector(seed, i, G.q(), G.k(), c);
            ++counts[kern.weight_of_general(c)];
        }
        partial[w] = std::move(counts);
    });
    for (const auto& counts : partial)
        if (!counts.empty())
            for (int i = 0; i <= G.n(); ++i) d.counts[i] += counts[i];
    return d;
}

std::string weight_report_json(const WeightDistribution& d) {
    std::string out = "{\n";
    out += "  \"version\": \"" + std::string(kToolVersion) + "\",\n";
    out += "  \"t\": " + std::to_string(d.t) + ",\n";
    out += "  \"h\": " + std::to_string(d.h) + ",\n";
    out += "  \"n\": " + std::to_string(d.n) + ",\n";
    out += "  \"k\": " + std::to_string(d.k) + ",\n";
    out += std::string("  \"mode\": \"") + (d.mode == SweepMode::Exhaustive ? "exhaustive" : "sampled") + "\",\n";
    if (d.mode == SweepMode::Sampled) {
        out += "  \"samples\": " + std::to_string(d.samples) + ",\n";
        out += "  \"seed\": " + std::to_string(d.seed) + ",\n";
    }
    out += "  \"weights\": {";
    bool first = true;
    for (int w = 0; w <= d.n; ++w) {
        if (!d.counts[w]) continue;
        if (!first) out += ",";
        out += "\n    \"" + std::to_string(w) + "\": " + std::to_string(d.counts[w]);
        first = false;
    }
    out += "\n  }\n}\n";
    return out;
}

}  // namespace hermicode
