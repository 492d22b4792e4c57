// Shared machinery for exhaustive and sampled sweeps over coefficient
// spaces: projective-representative enumeration, a counter-based seeded
// sampler, and a contiguous-range work splitter.
//
// Exhaustive sweeps iterate one representative per projective class (first
// nonzero coefficient equals 1), so counts at nonzero weights scale by q-1.
// Sampled sweeps derive sample i purely from (seed, i), so a partition of
// the index range across workers cannot change any result.

#pragma once

#include <array>
#include <cstdint>
#include <thread>
#include <vector>

namespace hermicode {

inline constexpr int kMaxSweepCoeffs = 20;

// (q^k - 1) / (q - 1).
inline uint64_t projective_rep_count(int q, int k) {
    uint64_t total = 0, block = 1;
    for (int i = 0; i < k; ++i) {
        total += block;
        block *= static_cast<uint64_t>(q);
    }
    return total;
}

// Enumerates coefficient vectors whose first nonzero entry is 1, ordered by
// lead position ascending, then by the trailing digits as a big-endian
// base-q odometer. Supports seeking to an arbitrary global index so workers
// can own contiguous ranges.
class RepCursor {
public:
    RepCursor(int q, int k, uint64_t start_index) : q_(q), k_(k) {
        block_.resize(k_);
        uint64_t b = 1;
        for (int lead = k_ - 1; lead >= 0; --lead) {
            block_[lead] = b;
            b *= static_cast<uint64_t>(q_);
        }
        seek(start_index);
    }

    const std::array<int, kMaxSweepCoeffs>& coeffs() const noexcept { return c_; }
    int lead() const noexcept { return lead_; }

    void seek(uint64_t index) {
        c_.fill(0);
        lead_ = 0;
        uint64_t rest = index;
        while (lead_ < k_ && rest >= block_[lead_]) {
            rest -= block_[lead_];
            ++lead_;
        }
        if (lead_ >= k_) return;  // past the end
        c_[lead_] = 1;
        for (int pos = k_ - 1; pos > lead_; --pos) {
            c_[pos] = static_cast<int>(rest % q_);
            rest /= q_;
        }
    }

    void next() noexcept {
        for (int pos = k_ - 1; pos > lead_; --pos) {
            if (++c_[pos] < q_) return;
            c_[pos] = 0;
        }
        c_[lead_] = 0;
        ++lead_;
        if (lead_ < k_) c_[lead_] = 1;
    }

private:
    int q_, k_, lead_ = 0;
    std::array<int, kMaxSweepCoeffs> c_{};
    std::vector<uint64_t> block_;
};

struct SplitMix64 {
    uint64_t s;
    uint64_t next() noexcept {
        s += 0x9E3779B97F4A7C15ull;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// Unbiased draw from [0, q) by rejection.
inline int uniform_below(SplitMix64& rng, int q) noexcept {
    const uint64_t bound = UINT64_MAX - UINT64_MAX % static_cast<uint64_t>(q);
    for (;;) {
        const uint64_t u = rng.next();
        if (u < bound) return static_cast<int>(u % static_cast<uint64_t>(q));
    }
}

// Deterministic nonzero coefficient vector number `index` of the stream
// identified by `seed`; independent of any worker partition.
inline void sample_nonzero_vector(uint64_t seed, uint64_t index, int q, int k,
                                  std::array<int, kMaxSweepCoeffs>& out) {
    SplitMix64 rng{seed ^ (0xD1B54A32D192ED03ull * (index + 1))};
    for (;;) {
        bool nonzero = false;
        for (int i = 0; i < k; ++i) {
            out[i] = uniform_below(rng, q);
            nonzero |= (out[i] != 0);
        }
        if (nonzero) return;
    }
}

// Runs fn(worker_id, begin, end) over a contiguous split of [0, total).
// Callers merge per-worker partials in worker-id order, which keeps every
// aggregate independent of the worker count.
template <class Fn>
void parallel_ranges(uint64_t total, int workers, Fn&& fn) {
    if (workers < 1) workers = 1;
    if (static_cast<uint64_t>(workers) > total && total > 0) workers = static_cast<int>(total);
    if (workers <= 1) {
        fn(0, uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const uint64_t chunk = total / workers;
    const uint64_t extra = total % workers;
    uint64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        const uint64_t len = chunk + (static_cast<uint64_t>(w) < extra ? 1 : 0);
        const uint64_t end = begin + len;
        pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
        begin = end;
    }
    for (auto& th : pool) th.join();
}

}  // namespace hermicode
