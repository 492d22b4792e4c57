#include <doctest.h>

#include "fixtures.hpp"

using namespace hermicode;
using fixtures::g4;
using fixtures::g9;
using fixtures::x4;
using fixtures::x9;

TEST_CASE("surface sizes are (t^2+1)(t^3+1)") {
    CHECK(x4().size() == 45);
    CHECK(x9().size() == 280);
    CHECK(x4().mask().count() == 45);
    CHECK(x9().mask().count() == 280);
}

TEST_CASE("membership matches the defining equation") {
    // (1:w:0:0) lies on the surface at t=2 since 1 + w^3 = 1 + 1 = 0.
    const int p = g4().point_index({1, 2, 0, 0});
    CHECK(x4().contains(p));

    for (const auto* x : {&x4(), &x9()}) {
        const Geometry& g = x->geometry();
        const Field& F = g.field();
        for (int i = 0; i < g.num_points(); ++i) {
            int acc = 0;
            for (int c : g.point(i)) acc = F.add(acc, F.norm(c));
            CHECK(x->contains(i) == (acc == 0));
        }
    }
}

TEST_CASE("non-square fields cannot carry the surface") {
    const Field f8(2, 3);
    const Geometry g8(f8);
    CHECK_THROWS_AS(HermitianSurface{g8}, std::domain_error);
}

TEST_CASE("tangent planes touch with section size t^3+t^2+1") {
    const HermitianSurface& X = x4();
    const Geometry& g = g4();

    const int p = g.point_index({1, 2, 0, 0});
    const int h = X.tangent_plane(p);
    CHECK(g.plane(h).coeffs == std::array<int, 4>{1, 3, 0, 0});  // conjugated coordinates
    CHECK(g.incident(h, p));
    CHECK(X.plane_section_size(h) == 13);
    CHECK(X.tangency_point(h) == p);

    const auto section = X.plane_section(h);
    CHECK(section.size() == 13);
    CHECK(std::is_sorted(section.begin(), section.end()));
    for (int sp : section) {
        CHECK(X.contains(sp));
        CHECK(g.incident(h, sp));
    }

    // Off-surface points have no tangent plane.
    int off = -1;
    for (int i = 0; i < g.num_points() && off < 0; ++i)
        if (!X.contains(i)) off = i;
    CHECK_THROWS_AS(X.tangent_plane(off), std::invalid_argument);
}

TEST_CASE("every plane section is t^3+1 or t^3+t^2+1, both realized") {
    for (const auto* x : {&x4(), &x9()}) {
        const int t = x->t();
        const int tangent_size = t * t * t + t * t + 1;
        const int nontangent_size = t * t * t + 1;
        int tangent = 0, nontangent = 0;
        for (int h = 0; h < x->geometry().num_planes(); ++h) {
            const int s = x->geometry().plane(h).mask.and_count(x->mask());
            REQUIRE(x->plane_section_size(h) == s);
            if (x->plane_is_tangent(h)) {
                REQUIRE(s == tangent_size);
                ++tangent;
            } else {
                REQUIRE(s == nontangent_size);
                ++nontangent;
            }
        }
        CHECK(tangent == x->size());  // distinct tangent planes, one per point
        CHECK(nontangent == x->geometry().num_planes() - x->size());
    }
}

TEST_CASE("tangent sections decompose into t+1 generators through the center") {
    const HermitianSurface& X = x4();
    const Geometry& g = g4();
    const int p = X.points()[7];
    const int h = X.tangent_plane(p);
    const auto sec = X.decompose_tangent_section(h);
    CHECK(sec.center == p);
    CHECK(sec.lines.size() == 3);

    PointMask uni(g.num_points());
    for (int l : sec.lines) {
        CHECK(X.line_is_generator(l));
        CHECK(g.line(l).mask.test(p));
        for (int lp : g.line(l).points) uni.set(lp);
    }
    CHECK(uni.count() == 13);
    CHECK(uni.and_count(X.mask()) == 13);
    CHECK(uni.and_count(g.plane(h).mask) == 13);

    int non_tangent = -1;
    for (int hh = 0; hh < g.num_planes() && non_tangent < 0; ++hh)
        if (!X.plane_is_tangent(hh)) non_tangent = hh;
    CHECK_THROWS_AS(X.decompose_tangent_section(non_tangent), std::invalid_argument);
}

TEST_CASE("line trichotomy: every line meets the surface in 1, t+1 or t^2+1 points") {
    for (const auto* x : {&x4(), &x9()}) {
        const Geometry& g = x->geometry();
        const int t = x->t();
        for (int l = 0; l < g.num_lines(); ++l) {
            const int s = g.line(l).mask.and_count(x->mask());
            switch (x->classify_line(l)) {
                case LineKind::Generator: REQUIRE(s == t * t + 1); break;
                case LineKind::Tangent: REQUIRE(s == 1); break;
                case LineKind::Secant: REQUIRE(s == t + 1); break;
            }
        }
    }
}

TEST_CASE("per-point line census is (t+1, t^2-t, t^4)") {
    // Exhaustive at t=2.
    for (int p : x4().points()) {
        const auto c = x4().line_census_at(p);
        REQUIRE(c.generators == 3);
        REQUIRE(c.tangents == 2);
        REQUIRE(c.secants == 16);
        REQUIRE(c.generators + c.tangents + c.secants == 21);
    }
    // Sampled at t=3.
    const auto& pts = x9().points();
    for (size_t i = 0; i < pts.size(); i += 5) {
        const auto c = x9().line_census_at(pts[i]);
        REQUIRE(c.generators == 4);
        REQUIRE(c.tangents == 6);
        REQUIRE(c.secants == 81);
    }
}

TEST_CASE("generator lists: count (t^3+1)(t+1), all inside the surface") {
    CHECK(x4().generators().size() == 27);
    CHECK(x9().generators().size() == 112);
    for (const auto* x : {&x4(), &x9()}) {
        for (int l : x->generators())
            CHECK(x->geometry().line(l).mask.subset_of(x->mask()));
    }
}

TEST_CASE("census text dump lists one line per point") {
    const std::string text = x4().line_census_text(3);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    CHECK(text.find("generators=3") != std::string::npos);
    CHECK(text.find("tangents=2") != std::string::npos);
}
