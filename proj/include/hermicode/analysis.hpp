// Executable form of the surface/quadric intersection theory: the closed
// form bounds, the scenario census over all quadrics, and constructive
// minimum-weight and second-weight witnesses with their counts.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hermicode/codes.hpp"
#include "hermicode/quadric.hpp"

namespace hermicode {

// Closed-form values: s = largest possible |X ∩ Q| over quadrics Q,
// s2 = second largest, plus the two named general-degree bounds.
struct BoundSet {
    int t = 0, h = 0;
    long long s = 0;         // 2(t^3+t^2-t)+t+1
    long long s2 = 0;        // 2t^3+t^2+1
    long long sorensen = 0;  // h(t^3+t^2-t)+t+1
    long long lachaud = 0;   // h(t^3+t^2+t+1)
};
BoundSet bounds(int t, int h);

// One label per quadric, following the case split of the intersection
// analysis. Hyperbolic buckets count contained surface generators per
// regulus and take the larger of the two.
enum class ScenarioLabel : uint8_t {
    RepeatedPlaneTangent,
    RepeatedPlaneNonTangent,
    LineQuadric,
    PairNoneTangent,
    PairOneTangentSecantLine,
    PairOneTangentTangentLine,
    PairBothTangentSecantLine,
    PairBothTangentGeneratorLine,
    ConeNoGenerator,
    ConeWithGenerator,
    Hyperbolic3PlusGenerators,
    Hyperbolic2Generators,
    Hyperbolic1Generator,
    Hyperbolic0Generators,
    EllipticEmpty,
    EllipticNonEmpty,
};
inline constexpr int kScenarioLabelCount = 16;
const char* scenario_label_name(ScenarioLabel l) noexcept;

// Structural impossibilities surfaced by the census instead of being
// assumed away. Any occurrence is recorded as a violation.
enum class CensusAnomaly : uint8_t {
    None,
    UnclassifiableSize,        // |Z(f)| matches no quadric orbit
    LineNotCollinear,          // q+1 zeros that do not form a line
    PlaneDecompositionFailed,  // plane pair / repeated plane not recoverable
    PairOneTangentGeneratorCommonLine,  // non-tangent plane containing a generator
    PairBothTangentTangentCommonLine,   // common line meeting X in one point
    HyperbolicStructure,                // contained generators not forming reguli
    SizeBoundViolated,                  // size outside the scenario's range
    SectionBoundViolated,               // elliptic plane-section bound > 2(t+1)
};

struct ScenarioResult {
    ScenarioLabel label = ScenarioLabel::EllipticEmpty;
    CensusAnomaly anomaly = CensusAnomaly::None;
    int zero_size = 0;  // |Z(f)| in PG(3,q)
    int x_size = 0;     // |Z(f) ∩ X|
};

// Reusable per-worker scratch for scenario classification.
struct ScenarioScratch {
    PointMask zmask;
    std::vector<int> zpoints;
    std::vector<int> gens;
    std::vector<int> plane_hits;  // per-plane counters for the section bound
};

// Immutable bundle of a surface with the evaluation tables and constants
// used by every census or witness routine.
class SurfaceStudy {
public:
    explicit SurfaceStudy(const HermitianSurface& X);

    const Geometry& geometry() const noexcept { return *g_; }
    const HermitianSurface& surface() const noexcept { return *X_; }
    const QuadricEvaluator& eval_all() const noexcept { return eval_all_; }
    const QuadricEvaluator& eval_surface() const noexcept { return eval_surface_; }
    int t() const noexcept { return X_->t(); }
    int q() const noexcept { return g_->q(); }
    long long s() const noexcept { return b_.s; }
    long long s2() const noexcept { return b_.s2; }

    ScenarioScratch make_scratch() const;

    // |Z(f) ∩ X| by direct evaluation at the surface points.
    int intersection_size(const QuadraticForm& f) const;

    ScenarioResult classify_scenario(const QuadraticForm& f, ScenarioScratch& scratch) const;

private:
    const Geometry* g_;
    const HermitianSurface* X_;
    QuadricEvaluator eval_all_;
    QuadricEvaluator eval_surface_;
    BoundSet b_;
};

// Inclusive bounds a scenario's intersection size must satisfy.
struct SizeRange {
    long long lo = 0, hi = 0;
};
SizeRange scenario_size_range(ScenarioLabel l, int t);

struct LabelStats {
    uint64_t count = 0;
    int min = 0, max = -1;
    std::map<int, uint64_t> histogram;
};

struct CensusReport {
    int t = 0, q = 0;
    SweepMode mode = SweepMode::Exhaustive;
    uint64_t representatives = 0;  // swept representatives or samples
    uint64_t seed = 0;             // sampled mode only
    long long s = 0, s2 = 0;

    std::vector<LabelStats> labels;  // indexed by ScenarioLabel
    int max_size = -1;
    int second_max_size = -1;
    bool gap_unattained = false;  // no size in (s2, s) and none above s

    uint64_t max_attainer_count = 0;
    std::vector<ScenarioLabel> max_attainer_labels;
    std::vector<ScenarioLabel> second_max_attainer_labels;
    // Representative forms attaining s (exhaustive mode, bounded size).
    std::vector<QuadraticForm> max_attainer_forms;
    bool attainer_forms_complete = false;

    uint64_t violation_count = 0;
    std::vector<std::string> violations;  // first few, for reporting

    bool intersection_dichotomy_ok = false;  // every size: == s or <= s2
    bool max_attainers_ok = false;           // s attained only by both-tangent/secant pairs
    bool second_attainers_ok = false;        // s2 attained only by the three known shapes
    uint64_t expected_max_attainers = 0;     // (1/2)(t^5+t^3+t^2+1)t^5, exhaustive only
    bool max_attainer_count_ok = false;      // exhaustive only

    bool passed() const noexcept {
        return violation_count == 0 && intersection_dichotomy_ok && max_attainers_ok &&
               second_attainers_ok && (mode == SweepMode::Sampled || max_attainer_count_ok);
    }
};

CensusReport census_exhaustive(const SurfaceStudy& st, int workers, bool allow_large = false);
CensusReport census_sampled(const SurfaceStudy& st, uint64_t samples, uint64_t seed, int workers);
std::string census_report_json(const CensusReport& r);

// Product of the tangent planes at two surface points that do not lie on
// each other's tangent planes; its zero set meets X in exactly s points and
// the codeword has minimum weight.
QuadraticForm construct_min_weight(const SurfaceStudy& st, int p1, int p2);

struct MinWeightEnumeration {
    uint64_t pair_count = 0;
    uint64_t expected_pairs = 0;
    bool sizes_ok = false;      // every pair product meets X in s points
    bool all_distinct = false;  // pairwise distinct codewords
    uint64_t total_codewords = 0;
    uint64_t expected_codewords = 0;  // (t^2-1) * expected_pairs
    bool passed() const noexcept {
        return sizes_ok && all_distinct && pair_count == expected_pairs &&
               total_codewords == expected_codewords;
    }
};
// Enumerates every unordered valid pair of tangent planes and verifies the
// resulting codewords are pairwise distinct.
MinWeightEnumeration enumerate_min_weight_words(const SurfaceStudy& st);

enum class WitnessKind : uint8_t { A, B, C };

// The three shapes attaining the second-largest intersection s2:
//   A - two tangent planes whose common line lies on X,
//   B - a hyperbolic quadric through three skew generators of X,
//   C - a tangent plane times a non-tangent plane whose common line meets X
//       in a single point.
struct SecondWeightWitness {
    WitnessKind kind = WitnessKind::A;
    QuadraticForm form;
    int intersection = 0;  // == s2
    int weight = 0;        // n - s2
    // Kind B structure (zero elsewhere):
    int surface_lines = 0;   // 2(t+1)
    int per_regulus = 0;     // t+1
    int double_points = 0;   // (t+1)^2
    int simple_points = 0;   // 2(t+1)(t^2-t)
};
SecondWeightWitness second_weight_witness(const SurfaceStudy& st, WitnessKind kind);
// Kind-B witnesses built from the first `count` pairwise skew generator
// triples, each with the full structure verification.
std::vector<SecondWeightWitness> kind_b_witnesses(const SurfaceStudy& st, int count);

// Named verification suites shared by the CLI and the test harness.
struct CheckResult {
    bool ok = false;
    std::string text;
};
CheckResult check_plane_sections(const SurfaceStudy& st);                    // section sizes + tangent count
CheckResult check_point_line_census(const SurfaceStudy& st, int max_points); // per-point line trichotomy
CheckResult check_quadric_classifier(const Geometry& g, int workers,
                                     uint64_t samples, uint64_t seed);       // orbit fingerprint sweep
CheckResult check_census(const SurfaceStudy& st, int workers, bool exhaustive,
                         uint64_t samples, uint64_t seed, bool allow_large);
CheckResult check_code_parameters(const SurfaceStudy& st, int workers,
                                  uint64_t samples, uint64_t seed);          // n, k, d
CheckResult check_min_weight_count(const SurfaceStudy& st, int workers);
CheckResult check_second_weight(const SurfaceStudy& st, int workers,
                                uint64_t samples, uint64_t seed);
CheckResult check_linear_code(const SurfaceStudy& st, int workers);          // h = 1 two-weight code

}  // namespace hermicode
