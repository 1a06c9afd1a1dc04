#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "levelrect/levelsets.hpp"
#include "levelrect/regularity.hpp"
#include "support/fixtures.hpp"

using namespace levelrect;

namespace {

double circ_diff(double a, double b) {
    double d = std::abs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

void check_tiling(const BoundaryDecomposition& d) {
    double total = 0.0;
    for (std::size_t k = 0; k < d.arcs.size(); ++k) {
        total += d.arcs[k].param_length();
        const auto& next = d.arcs[(k + 1) % d.arcs.size()];
        CHECK(circ_diff(d.arcs[k].s_end, next.s_begin) < 1e-12);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    for (std::size_t k = 0; k < d.arcs.size(); ++k) {
        bool mono = d.arcs[k].kind == ArcKind::monotone;
        bool mono_next = d.arcs[(k + 1) % d.arcs.size()].kind == ArcKind::monotone;
        CHECK(mono != mono_next);
    }
}

}  // namespace

TEST_CASE("decompose_boundary: f = y on the square") {
    ScalarField f = fixtures::y_square(129);
    BoundaryDecomposition d = decompose_boundary(f, 400, 0.02, 0.0);
    REQUIRE(d.n_f == 2);
    REQUIRE(d.arcs.size() == 4);
    check_tiling(d);

    // gamma_1: right edge ascending from z_1 = (1, 0).
    CHECK(d.arcs[0].kind == ArcKind::monotone);
    CHECK(d.arcs[0].direction == ArcDirection::increasing);
    CHECK(dist(f.shape().boundary_point(d.points[0]), {1.0, 0.0}) < 1e-9);
    CHECK(dist(f.shape().boundary_point(d.points[1]), {1.0, 1.0}) < 1e-9);
    CHECK(dist(f.shape().boundary_point(d.points[2]), {0.0, 1.0}) < 1e-9);
    CHECK(dist(f.shape().boundary_point(d.points[3]), {0.0, 0.0}) < 1e-9);

    CHECK(d.arcs[1].kind == ArcKind::level);
    CHECK(d.arcs[1].level == doctest::Approx(1.0));
    CHECK_FALSE(d.arcs[1].degenerate);
    CHECK(d.arcs[2].direction == ArcDirection::decreasing);
    CHECK(d.arcs[3].level == doctest::Approx(0.0));
}

TEST_CASE("decompose_boundary: f = y on the disk has two degenerate plateaus") {
    ScalarField f = fixtures::y_disk(129);
    BoundaryDecomposition d = decompose_boundary(f, 512, 0.04, 0.0);
    REQUIRE(d.n_f == 2);
    check_tiling(d);
    CHECK(d.arcs[1].degenerate);
    CHECK(d.arcs[3].degenerate);
    CHECK(dist(f.shape().boundary_point(d.arcs[1].s_begin), {0.0, 1.0}) < 1e-2);
    CHECK(dist(f.shape().boundary_point(d.arcs[3].s_begin), {0.0, -1.0}) < 1e-2);
    CHECK(d.arcs[1].level == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(d.arcs[3].level == doctest::Approx(-1.0).epsilon(1e-3));
}

TEST_CASE("decompose_boundary: f = xy on the square (L-shaped zero arc)") {
    ScalarField f = fixtures::xy_square(129);
    BoundaryDecomposition d = decompose_boundary(f, 512, 0.02, 0.0);
    REQUIRE(d.n_f == 2);
    check_tiling(d);

    // Ascending arc: the right edge; max plateau degenerates to (1, 1); the
    // descending arc is the top edge; the minimum arc is the L of the left
    // and bottom edges at level 0.
    CHECK(dist(f.shape().boundary_point(d.points[0]), {1.0, 0.0}) < 1e-9);
    CHECK(d.arcs[1].degenerate);
    CHECK(dist(f.shape().boundary_point(d.arcs[1].s_begin), {1.0, 1.0}) < 1e-9);
    CHECK(d.arcs[1].level == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(d.arcs[2].direction == ArcDirection::decreasing);
    CHECK_FALSE(d.arcs[3].degenerate);
    CHECK(d.arcs[3].level == doctest::Approx(0.0));
    CHECK(d.arcs[3].param_length() == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("decompose_boundary: refinement stability") {
    ScalarField f = fixtures::warped_square(129);
    const int m = 256;
    BoundaryDecomposition d1 = decompose_boundary(f, m, 0.02, 0.0);
    BoundaryDecomposition d2 = decompose_boundary(f, 2 * m, 0.02, 0.0);
    REQUIRE(d1.arcs.size() == d2.arcs.size());
    for (std::size_t k = 0; k < d1.arcs.size(); ++k)
        CHECK(circ_diff(d1.arcs[k].s_begin, d2.arcs[k].s_begin) <= 1.0 / m + 1e-12);
}

TEST_CASE("decompose_boundary: constant field is rejected") {
    ScalarField f = sample_field(DomainShape::square(), 17,
                                 [](double, double) { return 1.0; });
    CHECK_THROWS_WITH_AS(decompose_boundary(f, 64, 0.01, 0.0),
                         doctest::Contains("constant"), std::runtime_error);
}

TEST_CASE("classify: weakly regular fixtures report n_f = 2") {
    RunConfig cfg;
    auto expect_weak = [&](const ScalarField& f, const char* name) {
        INFO(name);
        BoundaryDecomposition d = decompose_boundary(f, cfg);
        RegularityVerdict v = classify(f, d, cfg);
        CHECK(v.status == RegularityStatus::weakly_regular);
        CHECK(v.n_f == 2);
        CHECK(v.failures.empty());
    };
    expect_weak(fixtures::y_square(129), "y on square");
    expect_weak(fixtures::y2_square(129), "y^2 on square");
    expect_weak(fixtures::xy_square(129), "xy on square");
    expect_weak(fixtures::warped_square(129), "warped sine on square");
    expect_weak(fixtures::y_half_disk(129), "y on half-disk");
    expect_weak(fixtures::y_disk(129), "y on disk");
    expect_weak(fixtures::y3_disk(129), "y^3 on disk");
    expect_weak(fixtures::distorted_disk(129), "distorted height on disk");
}

TEST_CASE("classify: plateau field fails the interior gradient proxy") {
    ScalarField f = fixtures::plateau_square(129);
    RunConfig cfg;
    BoundaryDecomposition d = decompose_boundary(f, cfg);
    RegularityVerdict v = classify(f, d, cfg);
    CHECK(v.status == RegularityStatus::not_regular);
    bool found = false;
    for (const auto& fail : v.failures)
        if (fail.condition == "interior_gradient" && fail.where.y > 0.8) found = true;
    CHECK(found);
}

TEST_CASE("classify: intermediate boundary plateau is almost weakly regular") {
    // The top edge carries a plateau at level 0.5 whose level component dives
    // into the interior, so condition 3 fails while 3' holds.
    ScalarField f = fixtures::staple_square(129);
    RunConfig cfg;
    BoundaryDecomposition d = decompose_boundary(f, cfg);
    CHECK(d.n_f == 4);
    RegularityVerdict v = classify(f, d, cfg);
    CHECK(v.status == RegularityStatus::almost_weakly_regular);
    bool found = false;
    for (const auto& fail : v.failures)
        if (fail.condition == "level_component_extends") found = true;
    CHECK(found);
}

TEST_CASE("trace_u_trajectory") {
    RunConfig cfg;
    SUBCASE("f = y ascends vertically to the top edge") {
        ScalarField f = fixtures::y_square(129);
        UTrajectory t = trace_u_trajectory(f, {0.5, 0.2}, +1, 0.02, 4.0, cfg);
        CHECK(dist(t.curve.back(), {0.5, 1.0}) < 1e-6);
        for (const Vec2& p : t.curve.pts) CHECK(p.x == doctest::Approx(0.5));
        for (std::size_t i = 1; i < t.values.size(); ++i)
            CHECK(t.values[i] > t.values[i - 1]);
    }
    SUBCASE("f = y^2 ascends to the top with monotone values") {
        ScalarField f = fixtures::y2_square(129);
        UTrajectory t = trace_u_trajectory(f, {0.5, 0.5}, +1, 0.02, 4.0, cfg);
        CHECK(dist(t.curve.back(), {0.5, 1.0}) < 1e-6);
        CHECK(t.values.front() == doctest::Approx(0.25));
        CHECK(t.values.back() == doctest::Approx(1.0).epsilon(1e-9));
        for (std::size_t i = 1; i < t.values.size(); ++i)
            CHECK(t.values[i] > t.values[i - 1]);
    }
    SUBCASE("f = xy ascends to the top or right edge") {
        ScalarField f = fixtures::xy_square(129);
        UTrajectory t = trace_u_trajectory(f, {0.5, 0.5}, +1, 0.01, 4.0, cfg);
        Vec2 end = t.curve.back();
        bool on_top = std::abs(end.y - 1.0) < 1e-6;
        bool on_right = std::abs(end.x - 1.0) < 1e-6;
        CHECK((on_top || on_right));
        for (std::size_t i = 1; i < t.values.size(); ++i)
            CHECK(t.values[i] > t.values[i - 1]);
    }
    SUBCASE("descending traces reach the bottom") {
        ScalarField f = fixtures::y_square(129);
        UTrajectory t = trace_u_trajectory(f, {0.25, 0.6}, -1, 0.02, 4.0, cfg);
        CHECK(dist(t.curve.back(), {0.25, 0.0}) < 1e-6);
        for (std::size_t i = 1; i < t.values.size(); ++i)
            CHECK(t.values[i] < t.values[i - 1]);
    }
    SUBCASE("start inside a flat zone is rejected") {
        ScalarField f = fixtures::plateau_square(129);
        CHECK_THROWS_WITH_AS(trace_u_trajectory(f, {0.5, 0.95}, +1, 0.02, 4.0, cfg),
                             doctest::Contains("degenerate"), std::runtime_error);
    }
}

TEST_CASE("check_elc") {
    RunConfig cfg;
    SUBCASE("straight level lines keep the full margin") {
        ScalarField f = fixtures::y_square(65);
        CHECK(check_elc(f, {0.5, 0.5}, 0.1, 12, cfg) == doctest::Approx(0.1));
    }
    SUBCASE("hyperbola arcs are locally flat near the center") {
        ScalarField f = fixtures::xy_square(129);
        double delta = check_elc(f, {0.5, 0.5}, 0.1, 16, cfg);
        CHECK(delta > 0.0);
        // Brute-force confirmation at the returned delta.
        BoundaryDecomposition d = decompose_boundary(f, cfg);
        for (int t = 0; t < 16; ++t) {
            double c = (t + 0.5) / 16.0;
            auto curves = extract_level(f, d, c, cfg);
            for (const auto& lc : curves) {
                if (lc.is_degenerate()) continue;
                int first = -1, last = -1;
                for (int i = 0; i < lc.curve.size(); ++i) {
                    if (dist(lc.curve.pts[i], {0.5, 0.5}) < delta) {
                        if (first < 0) first = i;
                        last = i;
                    }
                }
                for (int i = std::max(first, 0); i <= last; ++i)
                    CHECK(dist(lc.curve.pts[i], {0.5, 0.5}) < 0.1);
            }
        }
    }
    SUBCASE("plateau field: observed margin at the plateau edge") {
        // Levels of min(y, 0.8) below the plateau are straight lines, so the
        // probe keeps its full margin; recorded as a regression value.
        ScalarField f = fixtures::plateau_square(129);
        double delta = check_elc(f, {0.5, 0.8}, 0.1, 12, cfg);
        CHECK(delta == doctest::Approx(0.1));
    }
}
