#include "levelrect/rectify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace levelrect {

// ---------------------------------------------------------------------------
// DiscreteHomeomorphism

double DiscreteHomeomorphism::fiber_halfwidth(const DomainShape& model, double y) {
    switch (model.kind()) {
        case ShapeKind::square: return 0.5;
        case ShapeKind::half_disk:
        case ShapeKind::disk: {
            double w2 = 1.0 - y * y;
            return w2 > 0.0 ? std::sqrt(w2) : 0.0;
        }
    }
    return 0.5;
}

double DiscreteHomeomorphism::fiber_center(const DomainShape& model) {
    return model.kind() == ShapeKind::square ? 0.5 : 0.0;
}

Vec2 DiscreteHomeomorphism::lattice_point(int i, int j) const {
    double y = row_height(j);
    double w = fiber_halfwidth(target_shape, y);
    double cx = fiber_center(target_shape);
    double tau = static_cast<double>(i) / (k - 1);
    return {cx - w + 2.0 * w * tau, y};
}

Vec2 DiscreteHomeomorphism::eval(Vec2 q) const {
    double span = y_hi - y_lo;
    double rho = std::clamp((q.y - y_lo) / span, 0.0, 1.0) * (m - 1);
    int j = std::clamp(static_cast<int>(std::floor(rho)), 0, m - 2);
    double t = std::clamp(rho - j, 0.0, 1.0);

    double w = fiber_halfwidth(target_shape, q.y);
    double cx = fiber_center(target_shape);
    double tau = w > 1e-12 ? (q.x - (cx - w)) / (2.0 * w) : 0.5;
    double xi = std::clamp(tau, 0.0, 1.0) * (k - 1);
    int i = std::clamp(static_cast<int>(std::floor(xi)), 0, k - 2);
    double u = std::clamp(xi - i, 0.0, 1.0);

    Vec2 lo = lerp(at(i, j), at(i + 1, j), u);
    Vec2 hi = lerp(at(i, j + 1), at(i + 1, j + 1), u);
    return lerp(lo, hi, t);
}

namespace {

double quad_signed_area(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    return 0.5 * (cross(a, b) + cross(b, c) + cross(c, d) + cross(d, a));
}

}  // namespace

bool DiscreteHomeomorphism::check_orientation() const {
    for (int j = 0; j + 1 < m; ++j) {
        for (int i = 0; i + 1 < k; ++i) {
            double area =
                quad_signed_area(at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
            if (!(area > 0.0)) return false;
        }
    }
    return true;
}

double DiscreteHomeomorphism::recompute_residual(const ScalarField& f) const {
    double worst = 0.0;
    for (int j = 0; j < m; ++j) {
        double target = a * row_height(j) + b;
        for (int i = 0; i < k; ++i)
            worst = std::max(worst, std::abs(f.eval(at(i, j)) - target));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Band chart

BandChart::BandChart(std::function<double(double)> alpha, std::function<double(double)> beta,
                     double x0, double x1, bool transposed)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), x0_(x0), x1_(x1),
      transposed_(transposed) {
    if (!(x0_ < x1_)) throw std::invalid_argument("band chart: empty base interval");
    const int probes = 64;
    for (int i = 0; i <= probes; ++i) {
        double x = x0_ + (x1_ - x0_) * i / probes;
        if (!(alpha_(x) < beta_(x)))
            throw std::runtime_error("band chart: alpha >= beta inside the base interval");
    }
}

Vec2 BandChart::from_unit(Vec2 q) const {
    if (!transposed_) {
        double x = q.x, t = q.y;
        return {x, t * beta_(x) + (1.0 - t) * alpha_(x)};
    }
    double y = q.y, t = q.x;
    return {t * beta_(y) + (1.0 - t) * alpha_(y), y};
}

Vec2 BandChart::to_unit(Vec2 p) const {
    if (!transposed_) {
        double a = alpha_(p.x), b = beta_(p.x);
        return {p.x, (p.y - a) / (b - a)};
    }
    double a = alpha_(p.y), b = beta_(p.y);
    return {(p.x - a) / (b - a), p.y};
}

BandChart band_chart(const Band& band) {
    DomainShape model = band.model;
    auto alpha = [model](double y) {
        return DiscreteHomeomorphism::fiber_center(model) -
               DiscreteHomeomorphism::fiber_halfwidth(model, y);
    };
    auto beta = [model](double y) {
        return DiscreteHomeomorphism::fiber_center(model) +
               DiscreteHomeomorphism::fiber_halfwidth(model, y);
    };
    return BandChart(alpha, beta, band.y0, band.y1, /*transposed=*/true);
}

// ---------------------------------------------------------------------------
// Row construction shared by all models

namespace {

// The boundary level arc as an oriented level curve (start on the endpoint
// shared with the descending arc).
LevelCurve boundary_arc_curve(const ScalarField& field, const BoundaryDecomposition& d,
                              int arc_index) {
    const BoundaryArc& arc = d.arcs.at(arc_index);
    LevelCurve lc;
    lc.c = arc.level;
    if (arc.degenerate) {
        lc.degenerate_point = field.shape().boundary_point(arc.s_begin);
        return lc;
    }
    auto pts = d.arc_points(field.shape(), arc_index, 0.5 * field.h());
    lc.curve = Polyline(std::move(pts));
    if (d.n_f == 2 && arc_index == d.max_level_arc()) lc.curve.reverse();
    lc.start_arc = arc_index;
    lc.end_arc = arc_index;
    return lc;
}

std::vector<Vec2> point_row(Vec2 p, int k) { return std::vector<Vec2>(k, p); }

std::vector<Vec2> curve_row(const LevelCurve& lc, int k) {
    if (lc.is_degenerate()) return point_row(*lc.degenerate_point, k);
    return resample_by_mu(mu_parameterize(lc.curve), k).pts;
}

// Diameter of the region where the field reaches past level c toward the
// extremum (value >= c for sign +1, <= c for -1), including the extremum
// point itself.
double excursion_diameter(const ScalarField& field, double c, int sign, Vec2 extremum) {
    std::vector<Vec2> pts{extremum};
    for (int j = 0; j < field.ny(); ++j)
        for (int i = 0; i < field.nx(); ++i)
            if (field.in_mask(i, j) && sign * (field.value(i, j) - c) >= 0.0)
                pts.push_back(field.node_pos(i, j));
    return Polyline(std::move(pts)).diameter();
}

struct CapSpec {
    bool active = false;
    double c_cap = 0.0;     // level where the fan starts
    double y_cap = 0.0;     // model height of c_cap
    Vec2 v;                 // extremum the fan collapses to
    std::vector<Vec2> rim;  // resampled curve at c_cap
};

// Geometric level ladder toward the extremum value c_ext, stopped when the
// excursion region past c_k is small enough for the fan.
CapSpec build_cap(const ScalarField& field, const BoundaryDecomposition& d,
                  double c_base, double c_ext, Vec2 v, double eps_cap, int k,
                  double a, double b, const RunConfig& cfg) {
    CapSpec cap;
    cap.active = true;
    cap.v = v;
    int sign = c_ext > c_base ? 1 : -1;
    double gap = c_ext - c_base;
    const double value_slack = eps_cap * (1.0 + field.max_gradient_norm());
    double c_k = c_base;
    bool found = false;
    for (int step = 1; step <= 48; ++step) {
        gap *= 0.5;
        c_k = c_ext - gap;
        if (excursion_diameter(field, c_k, sign, v) <= eps_cap &&
            std::abs(c_ext - c_k) <= value_slack) {
            found = true;
            break;
        }
    }
    if (!found)
        throw std::runtime_error(
            "rectify: cap diameter not shrinking toward the boundary extremum");
    cap.c_cap = c_k;
    cap.y_cap = (c_k - b) / a;
    auto curves = extract_level(field, d, c_k, cfg);
    if (curves.size() != 1 || curves.front().is_degenerate())
        throw std::runtime_error("rectify: cap level is not a single curve");
    cap.rim = curve_row(curves.front(), k);
    return cap;
}

DiscreteHomeomorphism build_homeo(const ScalarField& field, const BoundaryDecomposition& d,
                                  DomainShape model, double a, double b, int m, int k,
                                  const CapSpec& cap_hi, const CapSpec& cap_lo,
                                  double y_lo, double y_hi, const RunConfig& cfg) {
    if (m < 2 || k < 2) throw std::invalid_argument("rectify: m and k must be >= 2");
    DiscreteHomeomorphism H;
    H.source_shape = field.shape();
    H.target_shape = model;
    H.k = k;
    H.m = m;
    H.y_lo = y_lo;
    H.y_hi = y_hi;
    H.a = a;
    H.b = b;
    H.grid.resize(static_cast<std::size_t>(k) * m);

    const double c_min = a * y_lo + b, c_max = a * y_hi + b;
    const double lo_level = std::min(c_min, c_max), hi_level = std::max(c_min, c_max);
    const double tiny = 1e-12 * std::max(field.value_range(), 1.0);

    for (int j = 0; j < m; ++j) {
        double y = H.row_height(j);
        double c = a * y + b;
        std::vector<Vec2> row;
        if (cap_hi.active && y >= cap_hi.y_cap && j == m - 1) {
            row = point_row(cap_hi.v, k);
        } else if (cap_lo.active && y <= cap_lo.y_cap && j == 0) {
            row = point_row(cap_lo.v, k);
        } else if (cap_hi.active && y > cap_hi.y_cap) {
            double lam = (y - cap_hi.y_cap) / (y_hi - cap_hi.y_cap);
            row.reserve(k);
            for (int i = 0; i < k; ++i) row.push_back(lerp(cap_hi.rim[i], cap_hi.v, lam));
        } else if (cap_lo.active && y < cap_lo.y_cap) {
            double lam = (cap_lo.y_cap - y) / (cap_lo.y_cap - y_lo);
            row.reserve(k);
            for (int i = 0; i < k; ++i) row.push_back(lerp(cap_lo.rim[i], cap_lo.v, lam));
        } else if (c <= lo_level + tiny || c >= hi_level - tiny) {
            int arc = std::abs(c - d.arcs[d.min_level_arc()].level) <
                              std::abs(c - d.arcs[d.max_level_arc()].level)
                          ? d.min_level_arc()
                          : d.max_level_arc();
            row = curve_row(boundary_arc_curve(field, d, arc), k);
        } else {
            auto curves = extract_level(field, d, c, cfg);
            if (curves.size() != 1) {
                std::ostringstream os;
                os << "rectify: level " << c << " has " << curves.size() << " components";
                throw std::runtime_error(os.str());
            }
            row = curve_row(curves.front(), k);
        }
        std::copy(row.begin(), row.end(), H.grid.begin() + static_cast<std::size_t>(j) * k);
    }

    H.residual = H.recompute_residual(field);
    H.orientation_ok = H.check_orientation();
    return H;
}

CapSpec no_cap() { return {}; }

void require_weakly_regular(const ScalarField& field, const BoundaryDecomposition& d,
                            const RunConfig& cfg) {
    RegularityVerdict v = classify(field, d, cfg);
    if (v.status != RegularityStatus::weakly_regular) {
        std::ostringstream os;
        os << "rectify: field is " << to_string(v.status);
        if (!v.failures.empty()) os << " (" << v.failures.front().message << ")";
        throw std::runtime_error(os.str());
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Bands

Band make_band(const ScalarField& field, const BoundaryDecomposition& d,
               const DomainShape& model, double a, double b, double y0, double y1,
               const RunConfig& cfg) {
    if (!(y0 < y1)) throw std::invalid_argument("make_band: y0 must be < y1");
    Band band;
    band.model = model;
    band.y0 = y0;
    band.y1 = y1;
    band.f0 = a * y0 + b;
    band.f1 = a * y1 + b;
    auto lower = extract_level(field, d, band.f0, cfg);
    auto upper = extract_level(field, d, band.f1, cfg);
    if (lower.size() != 1 || upper.size() != 1 || lower.front().is_degenerate() ||
        upper.front().is_degenerate())
        throw std::runtime_error("make_band: band edges are not single curves");
    band.lower = mu_parameterize(lower.front().curve);
    band.upper = mu_parameterize(upper.front().curve);
    return band;
}

DiscreteHomeomorphism rectify_band(const ScalarField& field, const Band& band, int k,
                                   int rows, const RunConfig& cfg) {
    if (rows < 2 || k < 2) throw std::invalid_argument("rectify_band: rows, k >= 2");
    if (band.f0 == band.f1) throw std::invalid_argument("rectify_band: f0 == f1");
    BandChart chart = band_chart(band);  // validates the fiber walls

    DiscreteHomeomorphism H;
    H.source_shape = field.shape();
    H.target_shape = band.model;
    H.k = k;
    H.m = rows;
    H.y_lo = band.y0;
    H.y_hi = band.y1;
    H.a = (band.f1 - band.f0) / (band.y1 - band.y0);
    H.b = band.f0 - H.a * band.y0;
    H.grid.resize(static_cast<std::size_t>(k) * rows);

    BoundaryDecomposition d = decompose_boundary(field, cfg);
    for (int j = 0; j < rows; ++j) {
        std::vector<Vec2> row;
        if (j == 0) {
            row = resample_by_mu(band.lower, k).pts;
        } else if (j == rows - 1) {
            row = resample_by_mu(band.upper, k).pts;
        } else {
            double c = H.a * H.row_height(j) + H.b;
            auto curves = extract_level(field, d, c, cfg);
            if (curves.size() != 1)
                throw std::runtime_error("rectify_band: level is not a single curve");
            row = curve_row(curves.front(), k);
        }
        std::copy(row.begin(), row.end(), H.grid.begin() + static_cast<std::size_t>(j) * k);
    }
    H.residual = H.recompute_residual(field);
    H.orientation_ok = H.check_orientation();
    return H;
}

// ---------------------------------------------------------------------------
// Model constructions

DiscreteHomeomorphism rectify_square(const ScalarField& field, int m, int k,
                                     const RunConfig& cfg) {
    BoundaryDecomposition d = decompose_boundary(field, cfg);
    require_weakly_regular(field, d, cfg);
    const double tol = cfg.resolved_tol_level(field);
    int lo = d.min_level_arc(), hi = d.max_level_arc();
    if (d.arcs[lo].degenerate || d.arcs[hi].degenerate)
        throw std::runtime_error("rectify_square: boundary level arcs must be edges");
    if (std::abs(d.arcs[lo].level) > tol || std::abs(d.arcs[hi].level - 1.0) > tol)
        throw std::runtime_error("rectify_square: needs f = 0 on bottom and f = 1 on top");
    return build_homeo(field, d, DomainShape::square(), 1.0, 0.0, m, k, no_cap(), no_cap(),
                       0.0, 1.0, cfg);
}

DiscreteHomeomorphism rectify_affine(const ScalarField& field, int m, int k,
                                     const RunConfig& cfg) {
    BoundaryDecomposition d = decompose_boundary(field, cfg);
    require_weakly_regular(field, d, cfg);
    int lo = d.min_level_arc(), hi = d.max_level_arc();
    if (d.arcs[lo].degenerate || d.arcs[hi].degenerate)
        throw std::runtime_error("rectify_affine: boundary level arcs must be edges");
    double f0 = d.arcs[lo].level, f1 = d.arcs[hi].level;
    if (std::abs(f1 - f0) <= cfg.resolved_tol_level(field))
        throw std::runtime_error("rectify_affine: f0 == f1 (degenerate range)");
    return build_homeo(field, d, DomainShape::square(), f1 - f0, f0, m, k, no_cap(),
                       no_cap(), 0.0, 1.0, cfg);
}

DiscreteHomeomorphism rectify_half_disk(const ScalarField& field, double eps_cap, int k,
                                        int m, const RunConfig& cfg) {
    BoundaryDecomposition d = decompose_boundary(field, cfg);
    require_weakly_regular(field, d, cfg);
    int lo = d.min_level_arc(), hi = d.max_level_arc();
    bool lo_pt = d.arcs[lo].degenerate, hi_pt = d.arcs[hi].degenerate;
    if (lo_pt && hi_pt)
        throw std::runtime_error("rectify_half_disk: both extrema are isolated points");
    if (!lo_pt && !hi_pt)
        throw std::runtime_error("rectify_half_disk: multiple extrema on the arc "
                                 "(expected exactly one isolated boundary extremum)");
    int diam_arc = lo_pt ? hi : lo;
    int vert_arc = lo_pt ? lo : hi;
    double f0 = d.arcs[diam_arc].level;  // on the model diameter
    double f1 = d.arcs[vert_arc].level;  // at the extremum v -> (0, 1)
    Vec2 v = field.shape().boundary_point(d.arcs[vert_arc].s_begin);
    double a = f1 - f0, b = f0;
    CapSpec cap = build_cap(field, d, f0, f1, v, eps_cap, k, a, b, cfg);
    return build_homeo(field, d, DomainShape::half_disk(), a, b, m, k, cap, no_cap(), 0.0,
                       1.0, cfg);
}

DiscreteHomeomorphism rectify_disk(const ScalarField& field, double eps_cap, int k, int m,
                                   const RunConfig& cfg) {
    BoundaryDecomposition d = decompose_boundary(field, cfg);
    require_weakly_regular(field, d, cfg);
    int lo = d.min_level_arc(), hi = d.max_level_arc();
    if (!d.arcs[lo].degenerate || !d.arcs[hi].degenerate)
        throw std::runtime_error("rectify_disk: extrema must be isolated boundary points");
    double f_lo = d.arcs[lo].level, f_hi = d.arcs[hi].level;
    Vec2 v_lo = field.shape().boundary_point(d.arcs[lo].s_begin);
    Vec2 v_hi = field.shape().boundary_point(d.arcs[hi].s_begin);
    double a = 0.5 * (f_hi - f_lo), b = 0.5 * (f_hi + f_lo);
    CapSpec cap_hi = build_cap(field, d, b, f_hi, v_hi, eps_cap, k, a, b, cfg);
    CapSpec cap_lo = build_cap(field, d, b, f_lo, v_lo, eps_cap, k, a, b, cfg);
    return build_homeo(field, d, DomainShape::disk(), a, b, m, k, cap_hi, cap_lo, -1.0,
                       1.0, cfg);
}

DiscreteHomeomorphism rectify_auto(const ScalarField& field, const RunConfig& cfg) {
    BoundaryDecomposition d = decompose_boundary(field, cfg);
    require_weakly_regular(field, d, cfg);
    bool lo_pt = d.arcs[d.min_level_arc()].degenerate;
    bool hi_pt = d.arcs[d.max_level_arc()].degenerate;
    double eps = cfg.resolved_eps_cap(field);
    if (!lo_pt && !hi_pt) return rectify_affine(field, cfg.levels, cfg.samples, cfg);
    if (lo_pt && hi_pt) return rectify_disk(field, eps, cfg.samples, cfg.levels, cfg);
    return rectify_half_disk(field, eps, cfg.samples, cfg.levels, cfg);
}

// ---------------------------------------------------------------------------
// Inversion

namespace {

// Newton solve of the bilinear patch p(u, t) = target inside one quad.
bool invert_quad(Vec2 q00, Vec2 q10, Vec2 q11, Vec2 q01, Vec2 target, double scale,
                 Vec2& uv) {
    double u = 0.5, t = 0.5;
    for (int it = 0; it < 12; ++it) {
        Vec2 p = lerp(lerp(q00, q10, u), lerp(q01, q11, u), t);
        Vec2 r = p - target;
        if (norm(r) < 1e-13 * scale) break;
        Vec2 dpu = lerp(q10 - q00, q11 - q01, t);
        Vec2 dpt = lerp(q01 - q00, q11 - q10, u);
        double det = cross(dpu, dpt);
        if (std::abs(det) < 1e-30) return false;
        u -= (r.x * dpt.y - r.y * dpt.x) / det;
        t -= (-r.x * dpu.y + r.y * dpu.x) / det;
        if (u < -1.0 || u > 2.0 || t < -1.0 || t > 2.0) return false;
    }
    Vec2 p = lerp(lerp(q00, q10, u), lerp(q01, q11, u), t);
    if (norm(p - target) > 1e-7 * scale) return false;
    uv = {u, t};
    return true;
}

}  // namespace

DiscreteHomeomorphism invert(const DiscreteHomeomorphism& H) {
    if (!H.orientation_ok)
        throw std::runtime_error("invert: homeomorphism has orientation defects");
    DiscreteHomeomorphism inv;
    inv.source_shape = H.target_shape;
    inv.target_shape = H.source_shape;
    inv.k = H.k;
    inv.m = H.m;
    if (H.source_shape.kind() == ShapeKind::disk) {
        inv.y_lo = -1.0;
        inv.y_hi = 1.0;
    } else {
        inv.y_lo = 0.0;
        inv.y_hi = 1.0;
    }
    inv.a = 1.0;
    inv.b = 0.0;
    inv.grid.resize(static_cast<std::size_t>(inv.k) * inv.m);

    const double scale = std::max(1.0, dist(H.source_shape.bbox_min(), H.source_shape.bbox_max()));
    // Quad bounding boxes for point location.
    struct Box { double xlo, xhi, ylo, yhi; };
    std::vector<Box> boxes(static_cast<std::size_t>(H.k - 1) * (H.m - 1));
    for (int j = 0; j + 1 < H.m; ++j) {
        for (int i = 0; i + 1 < H.k; ++i) {
            Vec2 c0 = H.at(i, j), c1 = H.at(i + 1, j), c2 = H.at(i + 1, j + 1),
                 c3 = H.at(i, j + 1);
            Box bx;
            bx.xlo = std::min({c0.x, c1.x, c2.x, c3.x});
            bx.xhi = std::max({c0.x, c1.x, c2.x, c3.x});
            bx.ylo = std::min({c0.y, c1.y, c2.y, c3.y});
            bx.yhi = std::max({c0.y, c1.y, c2.y, c3.y});
            boxes[static_cast<std::size_t>(j) * (H.k - 1) + i] = bx;
        }
    }

    double lattice_spacing = scale / std::max(H.k - 1, H.m - 1);
    double worst_roundtrip = 0.0;
    for (int j = 0; j < inv.m; ++j) {
        for (int i = 0; i < inv.k; ++i) {
            Vec2 p = inv.lattice_point(i, j);  // point of H's source domain
            bool found = false;
            Vec2 model_pt{};
            // Stored grid points (disk poles in particular) resolve directly.
            for (int gj = 0; gj < H.m && !found; ++gj)
                for (int gi = 0; gi < H.k && !found; ++gi)
                    if (dist(H.at(gi, gj), p) < 1e-12 * scale) {
                        model_pt = H.lattice_point(gi, gj);
                        found = true;
                    }
            double pad = 0.0;
            for (int attempt = 0; attempt < 2 && !found; ++attempt, pad = 0.25 * lattice_spacing) {
                for (int qj = 0; qj + 1 < H.m && !found; ++qj) {
                    for (int qi = 0; qi + 1 < H.k && !found; ++qi) {
                        const Box& bx = boxes[static_cast<std::size_t>(qj) * (H.k - 1) + qi];
                        if (p.x < bx.xlo - pad || p.x > bx.xhi + pad || p.y < bx.ylo - pad ||
                            p.y > bx.yhi + pad)
                            continue;
                        Vec2 uv;
                        if (!invert_quad(H.at(qi, qj), H.at(qi + 1, qj), H.at(qi + 1, qj + 1),
                                         H.at(qi, qj + 1), p, scale, uv))
                            continue;
                        double slack = attempt == 0 ? 1e-9 : 0.05;
                        if (uv.x < -slack || uv.x > 1.0 + slack || uv.y < -slack ||
                            uv.y > 1.0 + slack)
                            continue;
                        double u = std::clamp(uv.x, 0.0, 1.0);
                        double t = std::clamp(uv.y, 0.0, 1.0);
                        Vec2 m00 = H.lattice_point(qi, qj), m10 = H.lattice_point(qi + 1, qj);
                        Vec2 m01 = H.lattice_point(qi, qj + 1),
                             m11 = H.lattice_point(qi + 1, qj + 1);
                        model_pt = lerp(lerp(m00, m10, u), lerp(m01, m11, u), t);
                        found = true;
                    }
                }
            }
            if (!found)
                throw std::runtime_error("invert: point not locatable in any mapped quad");
            inv.grid[static_cast<std::size_t>(j) * inv.k + i] = model_pt;
            worst_roundtrip = std::max(worst_roundtrip, dist(H.eval(model_pt), p));
        }
    }
    inv.residual = worst_roundtrip;
    inv.orientation_ok = inv.check_orientation();
    return inv;
}

}  // namespace levelrect
