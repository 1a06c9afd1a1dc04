#include "levelrect/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace levelrect {

namespace {

constexpr int kCanvas = 1024;
constexpr double kMargin = 32.0;

struct Viewport {
    Vec2 lo, hi;
    double scale;

    Vec2 map(Vec2 p) const {
        double usable = kCanvas - 2.0 * kMargin;
        double w = hi.x - lo.x, h = hi.y - lo.y;
        double s = usable / std::max(w, h);
        double ox = kMargin + 0.5 * (usable - s * w);
        double oy = kMargin + 0.5 * (usable - s * h);
        // SVG y axis points down.
        return {ox + s * (p.x - lo.x), kCanvas - (oy + s * (p.y - lo.y))};
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

// Blue-to-red ramp through the viridis-like stops below.
std::string level_color(double t) {
    static const double stops[5][3] = {{68, 1, 84},
                                       {59, 82, 139},
                                       {33, 145, 140},
                                       {94, 201, 98},
                                       {253, 231, 37}};
    t = std::clamp(t, 0.0, 1.0) * 4.0;
    int i = std::min(static_cast<int>(t), 3);
    double u = t - i;
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(std::lround(stops[i][0] + u * (stops[i + 1][0] - stops[i][0]))),
                  static_cast<int>(std::lround(stops[i][1] + u * (stops[i + 1][1] - stops[i][1]))),
                  static_cast<int>(std::lround(stops[i][2] + u * (stops[i + 1][2] - stops[i][2]))));
    return buf;
}

void open_svg(std::ostringstream& os) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kCanvas << " "
       << kCanvas << "\">\n";
    os << "<rect width=\"" << kCanvas << "\" height=\"" << kCanvas
       << "\" fill=\"white\"/>\n";
}

void polyline_svg(std::ostringstream& os, const Viewport& vp,
                  const std::vector<Vec2>& pts, const std::string& color, double width) {
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
       << fmt(width) << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Vec2 q = vp.map(pts[i]);
        if (i) os << " ";
        os << fmt(q.x) << "," << fmt(q.y);
    }
    os << "\"/>\n";
}

void boundary_svg(std::ostringstream& os, const Viewport& vp, const DomainShape& shape) {
    std::vector<Vec2> pts;
    const int n = 256;
    for (int i = 0; i <= n; ++i)
        pts.push_back(shape.boundary_point(static_cast<double>(i % n) / n));
    polyline_svg(os, vp, pts, "#888888", 1.5);
}

}  // namespace

std::string svg_levels(const LevelFamily& fam, const DomainShape& shape) {
    Viewport vp{shape.bbox_min(), shape.bbox_max(), 1.0};
    std::ostringstream os;
    open_svg(os);
    boundary_svg(os, vp, shape);
    double lo = fam.levels.empty() ? 0.0 : fam.levels.front();
    double hi = fam.levels.empty() ? 1.0 : fam.levels.back();
    double span = std::max(hi - lo, 1e-300);
    for (std::size_t i = 0; i < fam.curves.size(); ++i) {
        const LevelCurve& lc = fam.curves[i];
        std::string color = level_color((fam.levels[i] - lo) / span);
        if (lc.is_degenerate()) {
            Vec2 q = vp.map(*lc.degenerate_point);
            os << "<circle cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y)
               << "\" r=\"4\" fill=\"" << color << "\"/>\n";
        } else {
            polyline_svg(os, vp, lc.curve.pts, color, 2.0);
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_warp(const DiscreteHomeomorphism& H) {
    Viewport vp{H.source_shape.bbox_min(), H.source_shape.bbox_max(), 1.0};
    std::ostringstream os;
    open_svg(os);
    boundary_svg(os, vp, H.source_shape);
    for (int j = 0; j < H.m; ++j) {
        std::vector<Vec2> row;
        for (int i = 0; i < H.k; ++i) row.push_back(H.at(i, j));
        polyline_svg(os, vp, row, level_color(static_cast<double>(j) / (H.m - 1)), 1.25);
    }
    for (int i = 0; i < H.k; ++i) {
        std::vector<Vec2> col;
        for (int j = 0; j < H.m; ++j) col.push_back(H.at(i, j));
        polyline_svg(os, vp, col, "#33333355", 1.0);
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace levelrect
