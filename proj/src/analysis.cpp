#include "hermicode/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermicode/version.hpp"

namespace hermicode {

BoundSet bounds(int t, int h) {
    if (t < 2) throw std::invalid_argument("t must be a prime power >= 2");
    if (h < 1) throw std::invalid_argument("h must be >= 1");
    const long long T = t;
    BoundSet b;
    b.t = t;
    b.h = h;
    b.s = 2 * (T * T * T + T * T - T) + T + 1;
    b.s2 = 2 * T * T * T + T * T + 1;
    b.sorensen = h * (T * T * T + T * T - T) + T + 1;
    b.lachaud = h * (T * T * T + T * T + T + 1);
    return b;
}

const char* scenario_label_name(ScenarioLabel l) noexcept {
    switch (l) {
        case ScenarioLabel::RepeatedPlaneTangent: return "RepeatedPlaneTangent";
        case ScenarioLabel::RepeatedPlaneNonTangent: return "RepeatedPlaneNonTangent";
        case ScenarioLabel::LineQuadric: return "LineQuadric";
        case ScenarioLabel::PairNoneTangent: return "PairNoneTangent";
        case ScenarioLabel::PairOneTangentSecantLine: return "PairOneTangent-SecantLine";
        case ScenarioLabel::PairOneTangentTangentLine: return "PairOneTangent-TangentLine";
        case ScenarioLabel::PairBothTangentSecantLine: return "PairBothTangent-SecantLine";
        case ScenarioLabel::PairBothTangentGeneratorLine: return "PairBothTangent-GeneratorLine";
        case ScenarioLabel::ConeNoGenerator: return "ConeNoGenerator";
        case ScenarioLabel::ConeWithGenerator: return "ConeWithGenerator";
        case ScenarioLabel::Hyperbolic3PlusGenerators: return "Hyperbolic-3+Generators";
        case ScenarioLabel::Hyperbolic2Generators: return "Hyperbolic-2Generators";
        case ScenarioLabel::Hyperbolic1Generator: return "Hyperbolic-1Generator";
        case ScenarioLabel::Hyperbolic0Generators: return "Hyperbolic-0Generators";
        case ScenarioLabel::EllipticEmpty: return "Elliptic-Empty";
        case ScenarioLabel::EllipticNonEmpty: return "Elliptic-NonEmpty";
    }
    return "?";
}

namespace {

const char* anomaly_text(CensusAnomaly a) noexcept {
    switch (a) {
        case CensusAnomaly::None: return "none";
        case CensusAnomaly::UnclassifiableSize: return "zero-set size matches no quadric orbit";
        case CensusAnomaly::LineNotCollinear: return "q+1 zeros are not collinear";
        case CensusAnomaly::PlaneDecompositionFailed: return "plane decomposition failed";
        case CensusAnomaly::PairOneTangentGeneratorCommonLine:
            return "non-tangent plane of a pair contains a surface generator";
        case CensusAnomaly::PairBothTangentTangentCommonLine:
            return "common line of two tangent planes meets the surface in one point";
        case CensusAnomaly::HyperbolicStructure: return "contained generators do not form reguli";
        case CensusAnomaly::SizeBoundViolated: return "intersection size outside the scenario bound";
        case CensusAnomaly::SectionBoundViolated: return "elliptic plane-section bound exceeded";
    }
    return "?";
}

}  // namespace

SurfaceStudy::SurfaceStudy(const HermitianSurface& X)
    : g_(&X.geometry()),
      X_(&X),
      eval_all_(X.geometry()),
      eval_surface_(X.geometry(), X.points()),
      b_(bounds(X.t(), 2)) {}

ScenarioScratch SurfaceStudy::make_scratch() const {
    ScenarioScratch sc;
    sc.zmask = PointMask(g_->num_points());
    sc.zpoints.reserve(2 * q() * q() + q() + 2);
    sc.gens.reserve(64);
    sc.plane_hits.assign(g_->num_planes(), 0);
    return sc;
}

int SurfaceStudy::intersection_size(const QuadraticForm& f) const {
    return eval_surface_.zero_count(f);
}

ScenarioResult SurfaceStudy::classify_scenario(const QuadraticForm& f, ScenarioScratch& sc) const {
    const Geometry& g = *g_;
    const HermitianSurface& X = *X_;
    const int qv = q();
    const int tv = t();
    const int npg = g.num_points();

    sc.zpoints.clear();
    sc.zmask.reset();
    for (int r = 0; r < npg; ++r) {
        if (eval_all_.eval_row(f, r) == 0) {
            sc.zmask.set(r);
            sc.zpoints.push_back(r);
        }
    }

    ScenarioResult res;
    res.zero_size = static_cast<int>(sc.zpoints.size());
    res.x_size = sc.zmask.and_count(X.mask());

    auto line_in_zero_set = [&](int lid) {
        for (int p : g.line(lid).points)
            if (!sc.zmask.test(p)) return false;
        return true;
    };
    auto plane_in_zero_set = [&](int hid) {
        for (int p : g.plane(hid).points)
            if (!sc.zmask.test(p)) return false;
        return true;
    };
    auto contained_plane_through = [&](int p) {
        for (int hid : g.planes_through_point(p))
            if (plane_in_zero_set(hid)) return hid;
        return -1;
    };

    const long long n0 = res.zero_size;

    if (n0 == static_cast<long long>(qv) + 1) {
        const int l = g.line_through_unchecked(sc.zpoints[0], sc.zpoints[1]);
        res.label = ScenarioLabel::LineQuadric;
        if (!line_in_zero_set(l)) res.anomaly = CensusAnomaly::LineNotCollinear;
        return res;
    }

    if (n0 == static_cast<long long>(qv) * qv + 1) {
        if (res.x_size == 0) {
            res.label = ScenarioLabel::EllipticEmpty;
            return res;
        }
        res.label = ScenarioLabel::EllipticNonEmpty;
        // Every plane meets the elliptic intersection in at most 2(t+1)
        // points (the degree bound of two curve sections).
        const int cap = 2 * (tv + 1);
        bool exceeded = false;
        for (int zp : sc.zpoints) {
            if (!X.contains(zp)) continue;
            for (int hid : g.planes_through_point(zp))
                if (++sc.plane_hits[hid] > cap) exceeded = true;
        }
        for (int zp : sc.zpoints) {
            if (!X.contains(zp)) continue;
            for (int hid : g.planes_through_point(zp)) sc.plane_hits[hid] = 0;
        }
        if (exceeded) res.anomaly = CensusAnomaly::SectionBoundViolated;
        return res;
    }

    if (n0 == (static_cast<long long>(qv) + 1) * (qv + 1)) {
        sc.gens.clear();
        for (int gl : X.generators())
            if (line_in_zero_set(gl)) sc.gens.push_back(gl);
        if (sc.gens.empty()) {
            res.label = ScenarioLabel::Hyperbolic0Generators;
            return res;
        }
        // Lines of one regulus are pairwise skew; lines of opposite reguli
        // meet in exactly one point. Split by the first found generator.
        int side_a = 0, side_b = 0;
        bool structure_ok = true;
        for (size_t i = 0; i < sc.gens.size(); ++i) {
            const bool in_a = (i == 0) || g.skew(sc.gens[0], sc.gens[i]);
            (in_a ? side_a : side_b)++;
            for (size_t j = i + 1; j < sc.gens.size(); ++j) {
                const bool jn_a = g.skew(sc.gens[0], sc.gens[j]) || sc.gens[j] == sc.gens[0];
                const int meets = g.line(sc.gens[i]).mask.and_count(g.line(sc.gens[j]).mask);
                if (in_a == jn_a ? meets != 0 : meets != 1) structure_ok = false;
            }
        }
        const int most = std::max(side_a, side_b);
        if (most >= 3) {
            res.label = ScenarioLabel::Hyperbolic3PlusGenerators;
            if (static_cast<int>(sc.gens.size()) != 2 * (tv + 1) || side_a != tv + 1 ||
                side_b != tv + 1 || res.x_size != b_.s2)
                structure_ok = false;
        } else if (most == 2) {
            res.label = ScenarioLabel::Hyperbolic2Generators;
        } else {
            res.label = ScenarioLabel::Hyperbolic1Generator;
        }
        if (!structure_ok) res.anomaly = CensusAnomaly::HyperbolicStructure;
        return res;
    }

    if (n0 == 2LL * qv * qv + qv + 1) {
        const int h1 = contained_plane_through(sc.zpoints[0]);
        if (h1 < 0) {
            res.label = ScenarioLabel::PairNoneTangent;
            res.anomaly = CensusAnomaly::PlaneDecompositionFailed;
            return res;
        }
        const PointMask& m1 = g.plane(h1).mask;
        int outside = -1;
        for (int zp : sc.zpoints)
            if (!m1.test(zp)) {
                outside = zp;
                break;
            }
        const int h2 = outside >= 0 ? contained_plane_through(outside) : -1;
        if (h2 < 0) {
            res.label = ScenarioLabel::PairNoneTangent;
            res.anomaly = CensusAnomaly::PlaneDecompositionFailed;
            return res;
        }
        // Common line from the first two shared points.
        int c1 = -1, c2 = -1;
        for (int p : g.plane(h1).points) {
            if (g.plane(h2).mask.test(p)) {
                if (c1 < 0)
                    c1 = p;
                else {
                    c2 = p;
                    break;
                }
            }
        }
        const int l = g.line_through_unchecked(c1, c2);
        const int ntan = (X.plane_is_tangent(h1) ? 1 : 0) + (X.plane_is_tangent(h2) ? 1 : 0);
        const LineKind kind = X.classify_line(l);
        if (ntan == 0) {
            res.label = ScenarioLabel::PairNoneTangent;
            if (kind == LineKind::Generator) res.anomaly = CensusAnomaly::PairOneTangentGeneratorCommonLine;
        } else if (ntan == 1) {
            if (kind == LineKind::Secant) {
                res.label = ScenarioLabel::PairOneTangentSecantLine;
            } else if (kind == LineKind::Tangent) {
                res.label = ScenarioLabel::PairOneTangentTangentLine;
            } else {
                res.label = ScenarioLabel::PairOneTangentSecantLine;
                res.anomaly = CensusAnomaly::PairOneTangentGeneratorCommonLine;
            }
        } else {
            if (kind == LineKind::Secant) {
                res.label = ScenarioLabel::PairBothTangentSecantLine;
            } else if (kind == LineKind::Generator) {
                res.label = ScenarioLabel::PairBothTangentGeneratorLine;
            } else {
                res.label = ScenarioLabel::PairBothTangentSecantLine;
                res.anomaly = CensusAnomaly::PairBothTangentTangentCommonLine;
            }
        }
        return res;
    }

    if (n0 == static_cast<long long>(qv) * qv + qv + 1) {
        const int h = contained_plane_through(sc.zpoints[0]);
        if (h >= 0) {
            res.label = X.plane_is_tangent(h) ? ScenarioLabel::RepeatedPlaneTangent
                                              : ScenarioLabel::RepeatedPlaneNonTangent;
            return res;
        }
        bool has_generator = false;
        for (int gl : X.generators())
            if (line_in_zero_set(gl)) {
                has_generator = true;
                break;
            }
        res.label = has_generator ? ScenarioLabel::ConeWithGenerator : ScenarioLabel::ConeNoGenerator;
        return res;
    }

    res.label = ScenarioLabel::EllipticEmpty;
    res.anomaly = CensusAnomaly::UnclassifiableSize;
    return res;
}

SizeRange scenario_size_range(ScenarioLabel l, int t) {
    const long long T = t;
    const BoundSet b = bounds(t, 2);
    switch (l) {
        case ScenarioLabel::RepeatedPlaneTangent: {
            const long long e = T * T * T + T * T + 1;
            return {e, e};
        }
        case ScenarioLabel::RepeatedPlaneNonTangent: {
            const long long e = T * T * T + 1;
            return {e, e};
        }
        case ScenarioLabel::LineQuadric: return {0, T * T + 1};
        case ScenarioLabel::PairNoneTangent: return {0, 2 * (T * T * T + 1)};
        case ScenarioLabel::PairOneTangentSecantLine: {
            const long long e = 2 * T * T * T + T * T - T + 1;
            return {e, e};
        }
        case ScenarioLabel::PairOneTangentTangentLine: return {b.s2, b.s2};
        case ScenarioLabel::PairBothTangentSecantLine: return {b.s, b.s};
        case ScenarioLabel::PairBothTangentGeneratorLine: return {b.s2, b.s2};
        case ScenarioLabel::ConeNoGenerator: return {0, T * T * T + T * T + T + 1};
        case ScenarioLabel::ConeWithGenerator: return {T * T + 1, 2 * T * T * T + 1};
        case ScenarioLabel::Hyperbolic3PlusGenerators: return {b.s2, b.s2};
        case ScenarioLabel::Hyperbolic2Generators: return {2 * (T * T + 1), T * T * T + 3 * T * T - T + 1};
        case ScenarioLabel::Hyperbolic1Generator: return {T * T + 1, T * T * T + 2 * T * T + 1};
        case ScenarioLabel::Hyperbolic0Generators: return {0, T * T * T + T * T + T + 1};
        case ScenarioLabel::EllipticEmpty: return {0, 0};
        case ScenarioLabel::EllipticNonEmpty: return {1, b.s2};
    }
    return {0, 0};
}

namespace {

constexpr size_t kViolationCap = 32;
constexpr size_t kAttainerFormCap = 1'000'000;

struct CensusPartial {
    std::vector<LabelStats> labels{static_cast<size_t>(kScenarioLabelCount)};
    uint64_t violation_count = 0;
    std::vector<std::string> violations;
    std::vector<QuadraticForm> max_attainers;
    bool attainers_complete = true;
};

void census_accumulate(const SurfaceStudy& st, const QuadraticForm& f, uint64_t index,
                       bool collect_forms, ScenarioScratch& sc, CensusPartial& cp) {
    const ScenarioResult r = st.classify_scenario(f, sc);
    auto violate = [&](const std::string& msg) {
        ++cp.violation_count;
        if (cp.violations.size() < kViolationCap)
            cp.violations.push_back("form " + std::to_string(index) + ": " + msg);
    };
    if (r.anomaly == CensusAnomaly::UnclassifiableSize) {
        violate(anomaly_text(r.anomaly));
        return;
    }
    if (r.anomaly != CensusAnomaly::None)
        violate(std::string(scenario_label_name(r.label)) + ": " + anomaly_text(r.anomaly));

    LabelStats& ls = cp.labels[static_cast<int>(r.label)];
    if (ls.count == 0) {
        ls.min = r.x_size;
        ls.max = r.x_size;
    } else {
        ls.min = std::min(ls.min, r.x_size);
        ls.max = std::max(ls.max, r.x_size);
    }
    ++ls.count;
    ++ls.histogram[r.x_size];

    const SizeRange range = scenario_size_range(r.label, st.t());
    if (r.x_size < range.lo || r.x_size > range.hi)
        violate(std::string(scenario_label_name(r.label)) + ": " + anomaly_text(CensusAnomaly::SizeBoundViolated) +
                " (" + std::to_string(r.x_size) + ")");

    if (collect_forms && r.x_size == st.s()) {
        if (cp.max_attainers.size() < kAttainerFormCap)
            cp.max_attainers.push_back(f);
        else
            cp.attainers_complete = false;
    }
}

CensusReport census_finalize(const SurfaceStudy& st, std::vector<CensusPartial>& partials,
                             CensusReport r) {
    r.t = st.t();
    r.q = st.q();
    r.s = st.s();
    r.s2 = st.s2();
    r.labels.assign(kScenarioLabelCount, LabelStats{});
    r.attainer_forms_complete = r.mode == SweepMode::Exhaustive;

    for (auto& cp : partials) {
        for (int i = 0; i < kScenarioLabelCount; ++i) {
            LabelStats& dst = r.labels[i];
            const LabelStats& src = cp.labels[i];
            if (src.count == 0) continue;
            if (dst.count == 0) {
                dst.min = src.min;
                dst.max = src.max;
            } else {
                dst.min = std::min(dst.min, src.min);
                dst.max = std::max(dst.max, src.max);
            }
            dst.count += src.count;
            for (auto [size, cnt] : src.histogram) dst.histogram[size] += cnt;
        }
        r.violation_count += cp.violation_count;
        for (auto& v : cp.violations)
            if (r.violations.size() < kViolationCap) r.violations.push_back(std::move(v));
        r.max_attainer_forms.insert(r.max_attainer_forms.end(), cp.max_attainers.begin(),
                                    cp.max_attainers.end());
        if (!cp.attainers_complete) r.attainer_forms_complete = false;
    }

    // Overall attained sizes across labels.
    std::map<int, uint64_t> overall;
    for (const auto& ls : r.labels)
        for (auto [size, cnt] : ls.histogram) overall[size] += cnt;
    for (auto it = overall.rbegin(); it != overall.rend(); ++it) {
        if (r.max_size < 0) {
            r.max_size = it->first;
        } else if (r.second_max_size < 0) {
            r.second_max_size = it->first;
            break;
        }
    }

    bool gap_clean = true;
    bool dichotomy = true;
    for (auto [size, cnt] : overall) {
        if (size > r.s || (size > r.s2 && size < r.s)) gap_clean = false;
        if (!(size == r.s || size <= r.s2)) dichotomy = false;
    }
    r.gap_unattained = gap_clean;
    r.intersection_dichotomy_ok = dichotomy;

    for (int i = 0; i < kScenarioLabelCount; ++i) {
        const auto& h = r.labels[i].histogram;
        if (h.count(static_cast<int>(r.s))) {
            r.max_attainer_labels.push_back(static_cast<ScenarioLabel>(i));
            r.max_attainer_count += h.at(static_cast<int>(r.s));
        }
        if (h.count(static_cast<int>(r.s2)))
            r.second_max_attainer_labels.push_back(static_cast<ScenarioLabel>(i));
    }

    r.max_attainers_ok =
        (r.mode == SweepMode::Sampled && r.max_attainer_labels.empty()) ||
        (r.max_attainer_labels == std::vector<ScenarioLabel>{ScenarioLabel::PairBothTangentSecantLine});
    if (r.mode == SweepMode::Exhaustive && r.max_size != r.s) r.max_attainers_ok = false;

    r.second_attainers_ok = true;
    for (ScenarioLabel l : r.second_max_attainer_labels) {
        if (l != ScenarioLabel::PairBothTangentGeneratorLine &&
            l != ScenarioLabel::Hyperbolic3PlusGenerators &&
            l != ScenarioLabel::PairOneTangentTangentLine)
            r.second_attainers_ok = false;
    }

    if (r.mode == SweepMode::Exhaustive) {
        const long long T = r.t;
        const long long t5 = T * T * T * T * T;
        const long long nx = (T * T + 1) * (T * T * T + 1);
        r.expected_max_attainers = static_cast<uint64_t>(nx * t5 / 2);
        r.max_attainer_count_ok = (r.max_attainer_count == r.expected_max_attainers);
    }

    std::sort(r.max_attainer_forms.begin(), r.max_attainer_forms.end());
    return r;
}

}  // namespace

CensusReport census_exhaustive(const SurfaceStudy& st, int workers, bool allow_large) {
    const uint64_t reps = projective_rep_count(st.q(), 10);
    if (reps > kLargeSweepThreshold && !allow_large)
        throw std::runtime_error("exhaustive census of " + std::to_string(reps) +
                                 " representatives exceeds the default budget; pass the "
                                 "acknowledgment flag to run it");
    if (workers < 1) workers = 1;
    std::vector<CensusPartial> partials(workers);
    parallel_ranges(reps, workers, [&](int w, uint64_t begin, uint64_t end) {
        ScenarioScratch sc = st.make_scratch();
        RepCursor cur(st.q(), 10, begin);
        QuadraticForm f;
        for (uint64_t i = begin; i < end; ++i, cur.next()) {
            std::copy_n(cur.coeffs().begin(), 10, f.c.begin());
            census_accumulate(st, f, i, true, sc, partials[w]);
        }
    });
    CensusReport r;
    r.mode = SweepMode::Exhaustive;
    r.representatives = reps;
    return census_finalize(st, partials, std::move(r));
}

CensusReport census_sampled(const SurfaceStudy& st, uint64_t samples, uint64_t seed, int workers) {
    if (workers < 1) workers = 1;
    std::vector<CensusPartial> partials(workers);
    parallel_ranges(samples, workers, [&](int w, uint64_t begin, uint64_t end) {
        ScenarioScratch sc = st.make_scratch();
        std::array<int, kMaxSweepCoeffs> c{};
        QuadraticForm f;
        for (uint64_t i = begin; i < end; ++i) {
            sample_nonzero_vector(seed, i, st.q(), 10, c);
            std::copy_n(c.begin(), 10, f.c.begin());
            census_accumulate(st, f, i, false, sc, partials[w]);
        }
    });
    CensusReport r;
    r.mode = SweepMode::Sampled;
    r.representatives = samples;
    r.seed = seed;
    return census_finalize(st, partials, std::move(r));
}

std::string census_report_json(const CensusReport& r) {
    std::string out = "{\n";
    out += "  \"version\": \"" + std::string(kToolVersion) + "\",\n";
    out += "  \"t\": " + std::to_string(r.t) + ",\n";
    out += "  \"q\": " + std::to_string(r.q) + ",\n";
    out += std::string("  \"mode\": \"") + (r.mode == SweepMode::Exhaustive ? "exhaustive" : "sampled") + "\",\n";
    if (r.mode == SweepMode::Sampled) {
        out += "  \"samples\": " + std::to_string(r.representatives) + ",\n";
        out += "  \"seed\": " + std::to_string(r.seed) + ",\n";
    } else {
        out += "  \"representatives\": " + std::to_string(r.representatives) + ",\n";
    }
    out += "  \"s\": " + std::to_string(r.s) + ",\n";
    out += "  \"s2\": " + std::to_string(r.s2) + ",\n";
    out += "  \"max_size\": " + std::to_string(r.max_size) + ",\n";
    out += "  \"second_max_size\": " + std::to_string(r.second_max_size) + ",\n";
    out += std::string("  \"gap_unattained\": ") + (r.gap_unattained ? "true" : "false") + ",\n";

    out += "  \"max_attainers\": {\"count\": " + std::to_string(r.max_attainer_count) + ", \"labels\": [";
    for (size_t i = 0; i < r.max_attainer_labels.size(); ++i) {
        if (i) out += ", ";
        out += std::string("\"") + scenario_label_name(r.max_attainer_labels[i]) + "\"";
    }
    out += "]},\n";
    out += "  \"second_max_attainers\": {\"labels\": [";
    for (size_t i = 0; i < r.second_max_attainer_labels.size(); ++i) {
        if (i) out += ", ";
        out += std::string("\"") + scenario_label_name(r.second_max_attainer_labels[i]) + "\"";
    }
    out += "]},\n";

    out += "  \"scenarios\": {\n";
    bool first_label = true;
    for (int i = 0; i < kScenarioLabelCount; ++i) {
        const LabelStats& ls = r.labels[i];
        if (ls.count == 0) continue;
        if (!first_label) out += ",\n";
        first_label = false;
        out += std::string("    \"") + scenario_label_name(static_cast<ScenarioLabel>(i)) + "\": {";
        out += "\"count\": " + std::to_string(ls.count);
        out += ", \"min\": " + std::to_string(ls.min);
        out += ", \"max\": " + std::to_string(ls.max);
        out += ", \"histogram\": {";
        bool first_size = true;
        for (auto [size, cnt] : ls.histogram) {
            if (!first_size) out += ", ";
            first_size = false;
            out += "\"" + std::to_string(size) + "\": " + std::to_string(cnt);
        }
        out += "}}";
    }
    out += "\n  },\n";

    out += "  \"violations\": {\"count\": " + std::to_string(r.violation_count) + ", \"first\": [";
    for (size_t i = 0; i < r.violations.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + r.violations[i] + "\"";
    }
    out += "]},\n";

    out += "  \"verdicts\": {";
    out += std::string("\"thm5_11\": ") +
           ((r.intersection_dichotomy_ok && r.max_attainers_ok && r.violation_count == 0) ? "true" : "false");
    if (r.mode == SweepMode::Exhaustive)
        out += std::string(", \"thm6_5\": ") + (r.max_attainer_count_ok ? "true" : "false");
    out += std::string(", \"thm6_6\": ") + (r.second_attainers_ok ? "true" : "false");
    out += "}\n}\n";
    return out;
}

QuadraticForm construct_min_weight(const SurfaceStudy& st, int p1, int p2) {
    const HermitianSurface& X = st.surface();
    const Geometry& g = st.geometry();
    if (!X.contains(p1) || !X.contains(p2))
        throw std::invalid_argument("both points must lie on the hermitian surface");
    const int h1 = X.tangent_plane(p1);
    const int h2 = X.tangent_plane(p2);
    if (g.plane(h1).mask.test(p2))
        throw std::invalid_argument("second point lies on the tangent plane at the first");
    return product_of_planes(g.field(), g.plane(h1).coeffs, g.plane(h2).coeffs);
}

MinWeightEnumeration enumerate_min_weight_words(const SurfaceStudy& st) {
    const HermitianSurface& X = st.surface();
    const Geometry& g = st.geometry();
    const Field& F = g.field();
    const int n = X.size();
    const long long T = st.t();
    const long long t5 = T * T * T * T * T;

    MinWeightEnumeration out;
    out.expected_pairs = static_cast<uint64_t>(static_cast<long long>(n) * t5 / 2);
    out.expected_codewords = static_cast<uint64_t>(st.q() - 1) * out.expected_pairs;
    out.sizes_ok = true;

    const int mw = (n + 63) / 64;
    std::vector<uint64_t> masks;
    masks.reserve(out.expected_pairs * mw);
    std::vector<uint64_t> buf(mw);

    const auto& pts = X.points();
    for (int i = 0; i < n; ++i) {
        const PointMask& tp_i = g.plane(X.tangent_plane(pts[i])).mask;
        for (int j = i + 1; j < n; ++j) {
            if (tp_i.test(pts[j])) continue;
            const QuadraticForm f = product_of_planes(
                F, g.plane(X.tangent_plane(pts[i])).coeffs, g.plane(X.tangent_plane(pts[j])).coeffs);
            std::fill(buf.begin(), buf.end(), 0);
            int zeros = 0;
            for (int r = 0; r < n; ++r) {
                if (st.eval_surface().eval_row(f, r) == 0) {
                    buf[r >> 6] |= uint64_t{1} << (r & 63);
                    ++zeros;
                }
            }
            if (zeros != st.s()) out.sizes_ok = false;
            masks.insert(masks.end(), buf.begin(), buf.end());
            ++out.pair_count;
        }
    }

    // Distinct zero sets imply pairwise distinct codewords.
    std::vector<uint32_t> order(out.pair_count);
    for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    auto cmp = [&](uint32_t a, uint32_t b) {
        return std::lexicographical_compare(masks.begin() + static_cast<size_t>(a) * mw,
                                            masks.begin() + static_cast<size_t>(a + 1) * mw,
                                            masks.begin() + static_cast<size_t>(b) * mw,
                                            masks.begin() + static_cast<size_t>(b + 1) * mw);
    };
    std::sort(order.begin(), order.end(), cmp);
    out.all_distinct = true;
    for (size_t i = 1; i < order.size(); ++i) {
        const auto a = order[i - 1], b = order[i];
        if (std::equal(masks.begin() + static_cast<size_t>(a) * mw,
                       masks.begin() + static_cast<size_t>(a + 1) * mw,
                       masks.begin() + static_cast<size_t>(b) * mw)) {
            out.all_distinct = false;
            break;
        }
    }
    out.total_codewords = static_cast<uint64_t>(st.q() - 1) * out.pair_count;
    return out;
}

namespace {

// First `count` pairwise skew generator triples in lexicographic order.
std::vector<std::array<int, 3>> skew_generator_triples(const SurfaceStudy& st, int count) {
    const Geometry& g = st.geometry();
    const auto& gens = st.surface().generators();
    std::vector<std::array<int, 3>> out;
    for (size_t a = 0; a < gens.size() && static_cast<int>(out.size()) < count; ++a)
        for (size_t b = a + 1; b < gens.size() && static_cast<int>(out.size()) < count; ++b) {
            if (!g.skew(gens[a], gens[b])) continue;
            for (size_t c = b + 1; c < gens.size() && static_cast<int>(out.size()) < count; ++c) {
                if (g.skew(gens[a], gens[c]) && g.skew(gens[b], gens[c]))
                    out.push_back({gens[a], gens[b], gens[c]});
            }
        }
    return out;
}

SecondWeightWitness witness_from_hyperbolic_triple(const SurfaceStudy& st,
                                                   const std::array<int, 3>& triple) {
    const Geometry& g = st.geometry();
    const HermitianSurface& X = st.surface();
    const int qv = st.q();
    const int tv = st.t();

    const Regulus opposite = g.transversals(triple[0], triple[1], triple[2]);
    std::vector<int> quad_points;
    for (int l : opposite.lines)
        for (int p : g.line(l).points) quad_points.push_back(p);
    std::sort(quad_points.begin(), quad_points.end());
    quad_points.erase(std::unique(quad_points.begin(), quad_points.end()), quad_points.end());
    if (static_cast<long long>(quad_points.size()) != static_cast<long long>(qv + 1) * (qv + 1))
        throw std::logic_error("regulus union does not have (q+1)^2 points");

    const auto basis = fit_forms(g, quad_points);
    if (basis.size() != 1)
        throw std::logic_error("hyperbolic quadric through a regulus is not unique");
    const QuadraticForm f = normalize_form(g.field(), basis[0]);
    if (classify(g, f) != QuadricClass::Hyperbolic)
        throw std::logic_error("fitted form is not a hyperbolic quadric");
    const ZeroSet z = zero_set(g, f);
    if (static_cast<long long>(z.points.size()) != static_cast<long long>(qv + 1) * (qv + 1) ||
        !std::equal(z.points.begin(), z.points.end(), quad_points.begin(), quad_points.end()))
        throw std::logic_error("fitted quadric does not match the regulus union");

    SecondWeightWitness w;
    w.kind = WitnessKind::B;
    w.form = f;
    w.intersection = z.mask.and_count(X.mask());
    w.weight = X.size() - w.intersection;
    if (w.intersection != st.s2())
        throw std::logic_error("kind B witness misses the second-largest intersection");

    // Structure: 2(t+1) surface generators on the quadric, t+1 per regulus,
    // meeting in (t+1)^2 double points; their union is the intersection.
    std::vector<int> on_quadric;
    for (int gl : X.generators()) {
        bool inside = true;
        for (int p : g.line(gl).points)
            if (!z.mask.test(p)) {
                inside = false;
                break;
            }
        if (inside) on_quadric.push_back(gl);
    }
    if (static_cast<int>(on_quadric.size()) != 2 * (tv + 1))
        throw std::logic_error("kind B witness does not contain 2(t+1) surface lines");
    int side_a = 0, side_b = 0;
    for (size_t i = 0; i < on_quadric.size(); ++i)
        ((i == 0 || g.skew(on_quadric[0], on_quadric[i])) ? side_a : side_b)++;
    if (side_a != tv + 1 || side_b != tv + 1)
        throw std::logic_error("kind B witness lines are not split t+1 per regulus");

    PointMask line_union(g.num_points());
    std::map<int, int> hits;
    for (int gl : on_quadric)
        for (int p : g.line(gl).points) {
            line_union.set(p);
            ++hits[p];
        }
    int doubles = 0;
    for (auto [p, c] : hits)
        if (c >= 2) ++doubles;
    w.surface_lines = static_cast<int>(on_quadric.size());
    w.per_regulus = side_a;
    w.double_points = doubles;
    w.simple_points = w.intersection - doubles;
    if (doubles != (tv + 1) * (tv + 1))
        throw std::logic_error("kind B witness has wrong double-point count");
    if (w.simple_points != 2 * (tv + 1) * (tv * tv - tv))
        throw std::logic_error("kind B witness has wrong simple-point count");
    if (line_union.and_count(X.mask()) != w.intersection || line_union.count() != w.intersection)
        throw std::logic_error("kind B witness lines do not cover the intersection");
    return w;
}

}  // namespace

std::vector<SecondWeightWitness> kind_b_witnesses(const SurfaceStudy& st, int count) {
    const auto triples = skew_generator_triples(st, count);
    if (static_cast<int>(triples.size()) < count)
        throw std::runtime_error("fewer than the requested number of skew generator triples exist");
    std::vector<SecondWeightWitness> out;
    out.reserve(triples.size());
    for (const auto& tr : triples) out.push_back(witness_from_hyperbolic_triple(st, tr));
    return out;
}

SecondWeightWitness second_weight_witness(const SurfaceStudy& st, WitnessKind kind) {
    const Geometry& g = st.geometry();
    const HermitianSurface& X = st.surface();

    if (kind == WitnessKind::B) return kind_b_witnesses(st, 1).front();

    SecondWeightWitness w;
    w.kind = kind;
    if (kind == WitnessKind::A) {
        // Two tangent planes through the points of one generator share that
        // generator as their common line.
        if (X.generators().empty()) throw std::runtime_error("surface has no generator lines");
        const int gl = X.generators().front();
        const auto& pts = g.line(gl).points;
        const int h1 = X.tangent_plane(pts[0]);
        const int h2 = X.tangent_plane(pts[1]);
        if (!g.plane(h1).mask.test(pts[1]) || !g.plane(h2).mask.test(pts[0]))
            throw std::logic_error("tangent planes do not share the generator");
        w.form = product_of_planes(g.field(), g.plane(h1).coeffs, g.plane(h2).coeffs);
    } else {
        // A tangent line through a surface point, inside the tangent plane;
        // any other plane through it meets X only at that point.
        const int p = X.points().front();
        const int hp = X.tangent_plane(p);
        int tangent_line = -1;
        for (int l : g.lines_through_point(p))
            if (X.classify_line(l) == LineKind::Tangent) {
                tangent_line = l;
                break;
            }
        if (tangent_line < 0) throw std::runtime_error("no tangent line found through the point");
        if (!g.line(tangent_line).mask.subset_of(g.plane(hp).mask))
            throw std::logic_error("tangent line is not inside the tangent plane");
        int other_plane = -1;
        for (int hid : g.planes_through_line(tangent_line))
            if (hid != hp) {
                other_plane = hid;
                break;
            }
        if (other_plane < 0 || X.plane_is_tangent(other_plane))
            throw std::logic_error("expected a non-tangent plane through a tangent line");
        w.form = product_of_planes(g.field(), g.plane(hp).coeffs, g.plane(other_plane).coeffs);
    }
    w.intersection = st.intersection_size(w.form);
    w.weight = X.size() - w.intersection;
    if (w.intersection != st.s2())
        throw std::logic_error("witness misses the second-largest intersection");
    return w;
}

}  // namespace hermicode
