#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "levelrect/domain.hpp"
#include "support/fixtures.hpp"

using namespace levelrect;
namespace fs = std::filesystem;

namespace {

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
    fs::path p = dir / name;
    std::ofstream out(p);
    out << text;
    return p;
}

fs::path temp_dir(const char* tag) {
    fs::path dir = fs::temp_directory_path() / (std::string("levelrect_") + tag);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("load_field: 3x3 all-ones square manifest") {
    auto dir = temp_dir("manifest_ones");
    write_file(dir, "values.csv", "1,1,1\n1,1,1\n1,1,1\n");
    auto manifest = write_file(dir, "field.json",
                               R"({"shape": "square", "nx": 3, "ny": 3, "values": "values.csv"})");
    ScalarField f = load_field(manifest.string());
    int masked = 0;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            if (f.in_mask(i, j)) ++masked;
    CHECK(masked == 9);
    CHECK(f.h() == doctest::Approx(0.5));
}

TEST_CASE("load_field: disk manifest with y values gets the inscribed-disk mask") {
    auto dir = temp_dir("manifest_disk");
    const int n = 129;
    std::string csv;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double y = -1.0 + 2.0 * j / (n - 1);
            csv += std::to_string(y);
            csv += (i + 1 < n) ? "," : "\n";
        }
    }
    write_file(dir, "values.csv", csv);
    auto manifest = write_file(dir, "field.json",
                               R"({"shape": "disk", "nx": 129, "ny": 129, "values": "values.csv"})");
    ScalarField f = load_field(manifest.string());
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            Vec2 p = f.node_pos(i, j);
            bool inside = p.x * p.x + p.y * p.y <= 1.0 + 1e-9;
            CHECK(f.in_mask(i, j) == inside);
        }
    }
    CHECK(f.min_value() == doctest::Approx(-1.0));
    CHECK(f.max_value() == doctest::Approx(1.0));
}

TEST_CASE("load_field: NaN inside the mask is rejected") {
    auto dir = temp_dir("manifest_nan");
    write_file(dir, "values.csv", "1,1,1\n1,nan,1\n1,1,1\n");
    auto manifest = write_file(dir, "field.json",
                               R"({"shape": "square", "nx": 3, "ny": 3, "values": "values.csv"})");
    CHECK_THROWS_WITH_AS(load_field(manifest.string()),
                         doctest::Contains("non-finite sample"), std::runtime_error);
}

TEST_CASE("load_field: malformed manifest and missing file") {
    auto dir = temp_dir("manifest_bad");
    auto manifest = write_file(dir, "broken.json", "{ not json");
    CHECK_THROWS_AS(load_field(manifest.string()), std::runtime_error);
    CHECK_THROWS_AS(load_field((dir / "missing.json").string()), std::runtime_error);
}

TEST_CASE("ScalarField rejects a disconnected mask") {
    std::vector<double> values(9, 1.0);
    std::vector<std::uint8_t> mask = {1, 0, 1, 0, 0, 0, 1, 0, 1};
    CHECK_THROWS_WITH_AS(ScalarField(DomainShape::square(), 3, 3, values, mask),
                         doctest::Contains("disconnected"), std::runtime_error);
}

TEST_CASE("ScalarField rejects a mask with a hole") {
    const int n = 5;
    std::vector<double> values(n * n, 1.0);
    std::vector<std::uint8_t> mask(n * n, 1);
    mask[2 * n + 2] = 0;  // center knocked out
    CHECK_THROWS_WITH_AS(ScalarField(DomainShape::square(), n, n, values, mask),
                         doctest::Contains("hole"), std::runtime_error);
}

TEST_CASE("eval: bilinear reconstruction") {
    ScalarField fy = fixtures::y_square(65);
    CHECK(fy.eval({0.5, 0.25}) == doctest::Approx(0.25).epsilon(1e-12));

    ScalarField fxy = fixtures::xy_square(65);
    CHECK(fxy.eval({0.5, 0.5}) == doctest::Approx(0.25).epsilon(1e-12));

    SUBCASE("exact at grid nodes") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> pick(0, 64);
        for (int t = 0; t < 50; ++t) {
            int i = pick(rng), j = pick(rng);
            CHECK(fxy.eval(fxy.node_pos(i, j)) == doctest::Approx(fxy.value(i, j)).epsilon(1e-14));
        }
    }

    SUBCASE("outside the domain throws") {
        CHECK_THROWS_AS(fy.eval({1.5, 0.5}), std::runtime_error);
        CHECK_THROWS_AS(fixtures::y_disk(65).eval({0.9, 0.9}), std::runtime_error);
    }
}

TEST_CASE("gradient: exact for the linear and bilinear fixtures") {
    ScalarField fy = fixtures::y_square(129);
    for (Vec2 p : {Vec2{0.3, 0.3}, Vec2{0.01, 0.99}, Vec2{1.0, 0.5}, Vec2{0.5, 0.0}}) {
        Vec2 g = fy.gradient(p);
        CHECK(g.x == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(g.y == doctest::Approx(1.0).epsilon(1e-12));
    }

    ScalarField fy2 = fixtures::y2_square(129);
    Vec2 g2 = fy2.gradient({0.5, 0.5});
    CHECK(g2.x == doctest::Approx(0.0));
    CHECK(g2.y == doctest::Approx(1.0).epsilon(1e-9));

    ScalarField fxy = fixtures::xy_square(129);
    Vec2 g3 = fxy.gradient({0.25, 0.75});
    CHECK(g3.x == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(g3.y == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("gradient: affine fields are reproduced exactly everywhere") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    for (int t = 0; t < 10; ++t) {
        double a = coef(rng), b = coef(rng), c = coef(rng);
        ScalarField f = sample_field(DomainShape::square(), 65,
                                     [&](double x, double y) { return a * x + b * y + c; });
        for (int q = 0; q < 20; ++q) {
            Vec2 p{unit(rng), unit(rng)};
            Vec2 g = f.gradient(p);
            CHECK(g.x == doctest::Approx(a).epsilon(1e-11));
            CHECK(g.y == doctest::Approx(b).epsilon(1e-11));
        }
    }
}

TEST_CASE("boundary_samples: square corners at m = 4") {
    ScalarField f = fixtures::y_square(33);
    auto samples = boundary_samples(f, 4);
    REQUIRE(samples.size() == 4);
    CHECK(dist(samples[0].p, {1.0, 0.0}) < 1e-12);
    CHECK(dist(samples[1].p, {1.0, 1.0}) < 1e-12);
    CHECK(dist(samples[2].p, {0.0, 1.0}) < 1e-12);
    CHECK(dist(samples[3].p, {0.0, 0.0}) < 1e-12);
}

TEST_CASE("boundary_samples: disk values of f = y at m = 8") {
    ScalarField f = fixtures::y_disk(129);
    auto samples = boundary_samples(f, 8);
    REQUIRE(samples.size() == 8);
    const double r = std::sqrt(0.5);
    const double expect[8] = {-1.0, -r, 0.0, r, 1.0, r, 0.0, -r};
    for (int i = 0; i < 8; ++i)
        CHECK(samples[i].value == doctest::Approx(expect[i]).epsilon(1e-9));
}

TEST_CASE("boundary_samples: half-disk ordering and boundary membership") {
    ScalarField f = fixtures::y_half_disk(129);
    auto samples = boundary_samples(f, 6);
    REQUIRE(samples.size() == 6);
    bool on_arc = false, on_diameter = false;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i) CHECK(samples[i].s > samples[i - 1].s);
        double defect = f.shape().boundary_defect(samples[i].p);
        CHECK(std::abs(defect) <= f.h() / 2);
        double r = norm(samples[i].p);
        if (std::abs(r - 1.0) < 1e-9 && samples[i].p.y > 1e-9) on_arc = true;
        if (std::abs(samples[i].p.y) < 1e-9) on_diameter = true;
    }
    CHECK(on_arc);
    CHECK(on_diameter);
}

TEST_CASE("boundary parameterization round-trips") {
    for (DomainShape shape :
         {DomainShape::square(), DomainShape::half_disk(), DomainShape::disk()}) {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> us(0.0, 1.0);
        for (int t = 0; t < 200; ++t) {
            double s = us(rng);
            Vec2 p = shape.boundary_point(s);
            double s2 = shape.boundary_param(p);
            double d = std::abs(s - s2);
            d = std::min(d, 1.0 - d);
            CHECK(d < 1e-9);
        }
    }
}

TEST_CASE("non-square cells are rejected") {
    std::vector<double> values(3 * 5, 0.0);
    CHECK_THROWS_WITH_AS(ScalarField(DomainShape::square(), 3, 5, values),
                         doctest::Contains("square"), std::runtime_error);
}
