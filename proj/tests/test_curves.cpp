#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "levelrect/curves.hpp"

using namespace levelrect;

namespace {

// Series oracle: partial sum of sum_{n>=1} s / (n 2^n), which converges to
// s * ln 2. Sixty terms put the tail far below every tolerance used here.
double segment_mu_oracle(double s, int terms = 60) {
    double sum = 0.0, w = 0.5;
    for (int n = 1; n <= terms; ++n, w *= 0.5) sum += s * w / n;
    return sum;
}

Polyline segment(Vec2 a, Vec2 b, int vertices) {
    Polyline out;
    for (int i = 0; i < vertices; ++i)
        out.pts.push_back(lerp(a, b, static_cast<double>(i) / (vertices - 1)));
    return out;
}

Polyline quarter_arc(int vertices) {
    Polyline out;
    for (int i = 0; i < vertices; ++i) {
        double t = 0.5 * std::numbers::pi * i / (vertices - 1);
        out.pts.push_back({std::cos(t), std::sin(t)});
    }
    return out;
}

// x-monotone polylines are automatically simple.
Polyline random_simple_polyline(std::mt19937& rng, int vertices, double scale = 1.0) {
    std::uniform_real_distribution<double> uy(-0.5 * scale, 0.5 * scale);
    std::uniform_real_distribution<double> ux(0.01 * scale, 0.1 * scale);
    Polyline out;
    double x = 0.0;
    for (int i = 0; i < vertices; ++i) {
        out.pts.push_back({x, uy(rng)});
        x += ux(rng);
    }
    return out;
}

// Exhaustive Frechet oracle: min over all monotone couplings of the max
// pairwise distance, enumerated recursively (small inputs only).
double frechet_oracle(const std::vector<Vec2>& a, const std::vector<Vec2>& b,
                      std::size_t i, std::size_t j) {
    double d = dist(a[i], b[j]);
    if (i + 1 == a.size() && j + 1 == b.size()) return d;
    double best = std::numeric_limits<double>::infinity();
    if (i + 1 < a.size()) best = std::min(best, frechet_oracle(a, b, i + 1, j));
    if (j + 1 < b.size()) best = std::min(best, frechet_oracle(a, b, i, j + 1));
    if (i + 1 < a.size() && j + 1 < b.size())
        best = std::min(best, frechet_oracle(a, b, i + 1, j + 1));
    return std::max(d, best);
}

}  // namespace

TEST_CASE("mu_n on a unit segment equals s/n") {
    Polyline seg = segment({0, 0}, {1, 0}, 1024);
    CHECK(mu_n(seg, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mu_n(seg, 2) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(mu_n(seg, 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(mu_n(seg, 7) == doctest::Approx(1.0 / 7.0).epsilon(1e-9));
}

TEST_CASE("mu_1 of a quarter arc is the chord") {
    Polyline arc = quarter_arc(256);
    // Brute-force oracle over all ordered vertex pairs.
    double brute = 0.0;
    for (std::size_t i = 0; i < arc.pts.size(); ++i)
        for (std::size_t j = i + 1; j < arc.pts.size(); ++j)
            brute = std::max(brute, dist(arc.pts[i], arc.pts[j]));
    CHECK(brute == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
    CHECK(mu_n(arc, 1) == doctest::Approx(brute).epsilon(1e-12));
}

TEST_CASE("mu_length of segments matches the series oracle") {
    const double ln2 = std::log(2.0);
    CHECK(segment_mu_oracle(1.0) == doctest::Approx(ln2).epsilon(1e-12));

    Polyline unit = segment({0, 0}, {1, 0}, 1024);
    CHECK(mu_length(unit, 1e-4) == doctest::Approx(segment_mu_oracle(1.0)).epsilon(1.1e-3));

    Polyline two = segment({-1, 0}, {1, 0}, 1024);
    CHECK(mu_length(two, 1e-4) == doctest::Approx(segment_mu_oracle(2.0)).epsilon(1.1e-3));
}

TEST_CASE("mu_length dominates half the diameter") {
    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        Polyline c = random_simple_polyline(rng, 40);
        double mu = mu_length(c, 1e-4);
        CHECK(mu >= c.diameter() / 2.0 - 1e-4);
    }
}

TEST_CASE("mu_length scales linearly") {
    std::mt19937 rng(23);
    for (double sigma : {0.25, 3.0}) {
        Polyline c = random_simple_polyline(rng, 30);
        Polyline scaled = c;
        for (auto& p : scaled.pts) p = sigma * p;
        double base = mu_length(c, 1e-6);
        double big = mu_length(scaled, 1e-6 * sigma);
        CHECK(big == doctest::Approx(sigma * base).epsilon(1e-6));
    }
}

TEST_CASE("mu_length is invariant under collinear vertex insertion") {
    std::mt19937 rng(29);
    Polyline c = random_simple_polyline(rng, 20);
    Polyline dense = refine_polyline(c, 0.013);
    double a = mu_length(c, 1e-6);
    double b = mu_length(dense, 1e-6);
    CHECK(b == doctest::Approx(a).epsilon(1e-6));
}

TEST_CASE("mu_parameterize on segments") {
    const double ln2 = std::log(2.0);
    SUBCASE("three equally spaced vertices") {
        Polyline c = segment({0, 0}, {1, 0}, 3);
        MuParamCurve mc = mu_parameterize(c);
        REQUIRE(mc.mu_cumulative.size() == 3);
        CHECK(mc.mu_cumulative[0] == 0.0);
        CHECK(mc.mu_cumulative[1] == doctest::Approx(segment_mu_oracle(0.5)).epsilon(2e-3));
        CHECK(mc.mu_cumulative[2] == doctest::Approx(segment_mu_oracle(1.0)).epsilon(2e-3));
        CHECK(mc.mu_total == doctest::Approx(ln2).epsilon(2e-3));
    }
    SUBCASE("single segment") {
        Polyline c = segment({0.5, 0.5}, {0.5, 2.5}, 2);
        MuParamCurve mc = mu_parameterize(c);
        CHECK(mc.mu_cumulative[0] == 0.0);
        CHECK(mc.mu_cumulative[1] == doctest::Approx(2.0 * ln2).epsilon(1e-6));
    }
    SUBCASE("cumulative table is non-decreasing on random curves") {
        std::mt19937 rng(31);
        for (int t = 0; t < 10; ++t) {
            Polyline c = random_simple_polyline(rng, 120);
            MuParamCurve mc = mu_parameterize(c);
            for (std::size_t i = 1; i < mc.mu_cumulative.size(); ++i)
                CHECK(mc.mu_cumulative[i] >= mc.mu_cumulative[i - 1]);
            CHECK(mc.mu_total == mc.mu_cumulative.back());
        }
    }
}

TEST_CASE("resample_by_mu") {
    SUBCASE("unit segment, k = 5: uniform spacing") {
        Polyline c = segment({0, 0}, {1, 0}, 33);
        Polyline r = resample_by_mu(mu_parameterize(c), 5);
        REQUIRE(r.size() == 5);
        for (int j = 0; j < 5; ++j) {
            CHECK(r.pts[j].x == doctest::Approx(j * 0.25).epsilon(2e-3));
            CHECK(r.pts[j].y == doctest::Approx(0.0));
        }
    }
    SUBCASE("k = 2 gives exactly the endpoints") {
        Polyline c = segment({0, 0}, {0.3, 0.7}, 17);
        Polyline r = resample_by_mu(mu_parameterize(c), 2);
        CHECK(dist(r.pts[0], c.front()) == 0.0);
        CHECK(dist(r.pts[1], c.back()) == 0.0);
    }
    SUBCASE("L-shaped polyline, k = 3: middle point halves the mu-length") {
        Polyline c{{Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}}};
        Polyline cd = refine_polyline(c, 1.0 / 64.0);
        MuParamCurve mc = mu_parameterize(cd);
        Polyline r = resample_by_mu(mc, 3);
        REQUIRE(r.size() == 3);
        Vec2 mid = r.pts[1];
        // Independent check: the mu-length of the prefix cut at `mid` should
        // be half the total.
        Polyline prefix;
        for (const Vec2& p : cd.pts) {
            prefix.pts.push_back(p);
            if (dist(p, mid) < 1e-9) break;
            if (p.x >= mid.x && p.y >= mid.y - 1e-12 && prefix.size() >= 2) break;
        }
        prefix.pts.back() = mid;
        double half = mu_length(prefix, 1e-6);
        CHECK(half == doctest::Approx(mc.mu_total / 2).epsilon(2e-2));
    }
    SUBCASE("degenerate curve is rejected") {
        Polyline c{{Vec2{0.5, 0.5}, Vec2{0.5, 0.5}, Vec2{0.5, 0.5}}};
        MuParamCurve mc;
        mc.base = c;
        mc.mu_cumulative = {0.0, 0.0, 0.0};
        mc.mu_total = 0.0;
        CHECK_THROWS_WITH_AS(resample_by_mu(mc, 4), doctest::Contains("degenerate"),
                             std::runtime_error);
    }
}

TEST_CASE("frechet basics") {
    Polyline a = segment({0, 0}, {1, 0}, 12);
    SUBCASE("identical curves have distance zero") {
        CHECK(frechet(a, a) == 0.0);
    }
    SUBCASE("parallel offset segments") {
        Polyline b = segment({0, 0.3}, {1, 0.3}, 12);
        CHECK(frechet(a, b) == doctest::Approx(0.3).epsilon(1e-12));
    }
    SUBCASE("reversed segment costs the full length") {
        Polyline b = a;
        b.reverse();
        CHECK(frechet(a, b) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("frechet agrees with the exhaustive coupling oracle") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 40; ++t) {
        std::vector<Vec2> a, b;
        std::uniform_int_distribution<int> n(2, 6);
        int na = n(rng), nb = n(rng);
        for (int i = 0; i < na; ++i) a.push_back({u(rng), u(rng)});
        for (int i = 0; i < nb; ++i) b.push_back({u(rng), u(rng)});
        double got = frechet_points(a, b);
        double expect = frechet_oracle(a, b, 0, 0);
        CHECK(got == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("frechet metric properties") {
    std::mt19937 rng(43);
    SUBCASE("symmetry is exact") {
        for (int t = 0; t < 25; ++t) {
            Polyline a = random_simple_polyline(rng, 20);
            Polyline b = random_simple_polyline(rng, 24);
            CHECK(frechet(a, b) == frechet(b, a));
        }
    }
    SUBCASE("triangle inequality within the refinement slack") {
        const double delta = 0.02;
        for (int t = 0; t < 50; ++t) {
            Polyline a = refine_polyline(random_simple_polyline(rng, 16), delta);
            Polyline b = refine_polyline(random_simple_polyline(rng, 16), delta);
            Polyline c = refine_polyline(random_simple_polyline(rng, 16), delta);
            double ab = frechet(a, b), bc = frechet(b, c), ac = frechet(a, c);
            CHECK(ac <= ab + bc + 2.0 * delta);
        }
    }
    SUBCASE("endpoint couplings are pinned") {
        for (int t = 0; t < 25; ++t) {
            Polyline a = random_simple_polyline(rng, 12);
            Polyline b = random_simple_polyline(rng, 15);
            double lower =
                std::max(dist(a.front(), b.front()), dist(a.back(), b.back()));
            CHECK(frechet(a, b) >= lower - 1e-12);
        }
    }
}

TEST_CASE("polyline simplicity test") {
    Polyline simple{{Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}}};
    CHECK(polyline_is_simple(simple, 1e-9));
    Polyline crossed{{Vec2{0, 0}, Vec2{1, 1}, Vec2{1, 0}, Vec2{0, 1}}};
    CHECK_FALSE(polyline_is_simple(crossed, 1e-9));
}

TEST_CASE("mu_n argument validation") {
    Polyline seg = segment({0, 0}, {1, 0}, 4);
    CHECK_THROWS_AS(mu_n(seg, 0), std::invalid_argument);
    CHECK_THROWS_AS(mu_length(seg, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(resample_by_mu(mu_parameterize(seg), 1), std::invalid_argument);
}
