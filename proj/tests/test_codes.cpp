#include <doctest.h>

#include <numeric>
#include <set>

#include "fixtures.hpp"

using namespace hermicode;
using fixtures::g4;
using fixtures::study4;
using fixtures::study9;
using fixtures::x4;
using fixtures::x9;

TEST_CASE("monomial bases in graded-lex order") {
    CHECK(monomial_basis(2).size() == 10);
    CHECK(monomial_basis(1).size() == 4);
    CHECK(monomial_basis(3).size() == 20);

    // Degree-2 basis order coincides with the quadratic coefficient order.
    const auto b = monomial_basis(2);
    for (int m = 0; m < 10; ++m) {
        const auto [i, j] = kQuadMonomialPairs[m];
        std::array<int, 4> e{};
        e[i] += 1;
        e[j] += 1;
        CHECK(b.exponents[m] == e);
    }
    CHECK_THROWS_AS(monomial_basis(0), std::invalid_argument);
}

TEST_CASE("generator matrices have full rank for h <= t") {
    const GeneratorMatrix g22(x4(), 2);
    CHECK(g22.n() == 45);
    CHECK(g22.k() == 10);
    CHECK(g22.rank() == 10);

    const GeneratorMatrix g32(x9(), 2);
    CHECK(g32.n() == 280);
    CHECK(g32.k() == 10);
    CHECK(g32.rank() == 10);

    const GeneratorMatrix g21(x4(), 1);
    CHECK(g21.n() == 45);
    CHECK(g21.k() == 4);
    CHECK(g21.rank() == 4);

    const GeneratorMatrix g33(x9(), 3);
    CHECK(g33.k() == 20);
    CHECK(g33.rank() == 20);
}

TEST_CASE("beyond the injectivity regime the rank drops by the surface relation") {
    // At h = t+1 the defining polynomial of the surface itself is a form
    // vanishing on every point, so the evaluation map has a kernel.
    const GeneratorMatrix g23(x4(), 3);
    CHECK(g23.k() == 20);
    CHECK(g23.rank() == 19);
    CHECK(g23.dim() == 19);
    CHECK_THROWS_AS(weight_distribution_exhaustive(g23, 1), std::invalid_argument);
}

TEST_CASE("codewords and weights") {
    const GeneratorMatrix G(x4(), 2);
    const std::vector<int> zero(10, 0);
    CHECK(GeneratorMatrix::weight(G.codeword(zero)) == 0);

    // A product of tangent planes over a secant line gives weight 22.
    const QuadraticForm f = construct_min_weight(study4(), x4().points()[0], [] {
        const auto& pts = x4().points();
        const PointMask& tp = g4().plane(x4().tangent_plane(pts[0])).mask;
        for (int j = 1; j < static_cast<int>(pts.size()); ++j)
            if (!tp.test(pts[j])) return pts[j];
        return -1;
    }());
    std::vector<int> coeffs(f.c.begin(), f.c.end());
    CHECK(GeneratorMatrix::weight(G.codeword(coeffs)) == 22);

    // Scaling the coefficients never changes the weight.
    const Field& F = g4().field();
    for (int lam = 2; lam < 4; ++lam) {
        std::vector<int> scaled(10);
        for (int m = 0; m < 10; ++m) scaled[m] = F.mul(lam, coeffs[m]);
        CHECK(GeneratorMatrix::weight(G.codeword(scaled)) == 22);
    }
    CHECK_THROWS_AS(G.codeword(std::vector<int>(9, 0)), std::invalid_argument);
}

TEST_CASE("weight plus surface zeros equals the length (two routes)") {
    for (const SurfaceStudy* st : {&study4(), &study9()}) {
        const GeneratorMatrix G(st->surface(), 2);
        std::array<int, kMaxSweepCoeffs> buf{};
        for (uint64_t i = 0; i < 10'000; ++i) {
            sample_nonzero_vector(1234, i, st->q(), 10, buf);
            QuadraticForm f;
            std::copy_n(buf.begin(), 10, f.c.begin());
            // Route 1: row combination through the generator matrix.
            const std::vector<int> coeffs(f.c.begin(), f.c.end());
            const int w = GeneratorMatrix::weight(G.codeword(coeffs));
            // Route 2: point evaluation of the form on the surface.
            CHECK(w + st->intersection_size(f) == G.n());
        }
    }
}

TEST_CASE("exhaustive weight distribution at t=2, h=2") {
    const GeneratorMatrix G(x4(), 2);
    const auto dist = weight_distribution_exhaustive(G, 2);

    CHECK(dist.min_distance() == 22);
    CHECK(dist.counts[22] == 2160);
    CHECK(dist.second_weight() == 24);
    CHECK(dist.counts[0] == 1);
    CHECK(dist.total_words() == 1ull << 20);  // 4^10

    // Scalar orbits: every nonzero-weight count is divisible by q-1.
    for (int w = 1; w <= dist.n; ++w) CHECK(dist.counts[w] % 3 == 0);
}

TEST_CASE("exhaustive weights at t=2, h=1 are exactly {32, 36}") {
    const GeneratorMatrix G(x4(), 1);
    const auto dist = weight_distribution_exhaustive(G, 1);
    std::set<int> weights;
    for (int w = 1; w <= dist.n; ++w)
        if (dist.counts[w]) weights.insert(w);
    CHECK(weights == std::set<int>{32, 36});
    CHECK(dist.total_words() == 256);  // 4^4
}

TEST_CASE("sampled distributions are worker-count independent") {
    const GeneratorMatrix G(x9(), 2);
    const auto one = weight_distribution_sampled(G, 5000, 7, 1);
    const auto three = weight_distribution_sampled(G, 5000, 7, 3);
    const auto eight = weight_distribution_sampled(G, 5000, 7, 8);
    CHECK(one.counts == three.counts);
    CHECK(one.counts == eight.counts);
    CHECK(one.total_words() == 5000);
    CHECK(weight_report_json(one) == weight_report_json(eight));
}

TEST_CASE("distribution accessors reject degenerate data") {
    WeightDistribution d;
    d.n = 4;
    d.counts = {1, 0, 0, 0, 0};
    CHECK_THROWS_AS(d.min_distance(), std::domain_error);
    d.counts[3] = 5;
    CHECK(d.min_distance() == 3);
    CHECK_THROWS_AS(d.second_weight(), std::domain_error);
}

TEST_CASE("matrix export format") {
    const GeneratorMatrix G(x4(), 1);
    const std::string text = G.export_text();
    CHECK(text.rfind("q=4 k=4 n=45\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);  // header + 4 rows

    // First row is the evaluation of x0 at all surface points, in order.
    const size_t row_start = text.find('\n') + 1;
    const std::string first_row = text.substr(row_start, text.find('\n', row_start) - row_start);
    std::string expected;
    for (int j = 0; j < 45; ++j) {
        if (j) expected += ' ';
        expected += std::to_string(g4().point(x4().points()[j])[0]);
    }
    CHECK(first_row == expected);
}

TEST_CASE("weight report embeds metadata") {
    const GeneratorMatrix G(x4(), 2);
    const auto dist = weight_distribution_sampled(G, 100, 42, 2);
    const std::string json = weight_report_json(dist);
    CHECK(json.find("\"t\": 2") != std::string::npos);
    CHECK(json.find("\"mode\": \"sampled\"") != std::string::npos);
    CHECK(json.find("\"seed\": 42") != std::string::npos);
    CHECK(json.find("\"samples\": 100") != std::string::npos);
    CHECK(json.find("\"version\"") != std::string::npos);
}
