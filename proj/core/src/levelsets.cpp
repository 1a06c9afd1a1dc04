#include "levelrect/levelsets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace levelrect {

namespace {

// Edge keys for chaining marching-squares segments: each crossing lies on a
// grid edge, identified by its lower-left node and axis bit.
using EdgeKey = long long;

EdgeKey h_edge(int i, int j, int nx) { return (static_cast<long long>(j) * nx + i) << 1; }
EdgeKey v_edge(int i, int j, int nx) {
    return ((static_cast<long long>(j) * nx + i) << 1) | 1;
}

struct Crossing {
    Vec2 p;
};

struct SegmentSink {
    std::map<EdgeKey, Vec2> point;
    std::map<EdgeKey, std::vector<EdgeKey>> adj;

    void add(EdgeKey a, Vec2 pa, EdgeKey b, Vec2 pb) {
        if (dist(pa, pb) < 1e-13) return;  // exact-node degeneracies
        point[a] = pa;
        point[b] = pb;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
};

}  // namespace

std::vector<LevelCurve> extract_level(const ScalarField& field,
                                      const BoundaryDecomposition& d, double c,
                                      const RunConfig& cfg) {
    const double range = std::max(field.value_range(), 1e-300);
    if (c < field.min_value() - 1e-9 * range || c > field.max_value() + 1e-9 * range)
        throw std::invalid_argument("extract_level: c outside the field's value range");

    const DomainShape shape = field.shape();
    const double h = field.h();

    // Levels sitting on a boundary level arc are that arc (a point when the
    // arc is degenerate).
    for (std::size_t k = 0; k < d.arcs.size(); ++k) {
        const BoundaryArc& arc = d.arcs[k];
        if (arc.kind != ArcKind::level) continue;
        if (std::abs(c - arc.level) > 1e-12 * range) continue;
        LevelCurve lc;
        lc.c = c;
        if (arc.degenerate) {
            lc.degenerate_point = shape.boundary_point(arc.s_begin);
        } else {
            auto pts = d.arc_points(shape, static_cast<int>(k), 0.5 * h);
            lc.curve = Polyline(std::move(pts));
            // Start at the endpoint shared with the descending arc.
            if (d.n_f == 2 && static_cast<int>(k) == d.max_level_arc()) lc.curve.reverse();
            lc.start_arc = static_cast<int>(k);
            lc.end_arc = static_cast<int>(k);
        }
        return {lc};
    }

    SegmentSink sink;
    const int nx = field.nx(), ny = field.ny();
    for (int j = 0; j + 1 < ny; ++j) {
        for (int i = 0; i + 1 < nx; ++i) {
            if (!field.usable(i, j) || !field.usable(i + 1, j) ||
                !field.usable(i, j + 1) || !field.usable(i + 1, j + 1))
                continue;
            if (!field.in_mask(i, j) && !field.in_mask(i + 1, j) &&
                !field.in_mask(i, j + 1) && !field.in_mask(i + 1, j + 1))
                continue;
            double v00 = field.ext_value(i, j), v10 = field.ext_value(i + 1, j);
            double v11 = field.ext_value(i + 1, j + 1), v01 = field.ext_value(i, j + 1);
            int mask = (v00 >= c ? 1 : 0) | (v10 >= c ? 2 : 0) | (v11 >= c ? 4 : 0) |
                       (v01 >= c ? 8 : 0);
            if (mask == 0 || mask == 15) continue;

            Vec2 n00 = field.node_pos(i, j);
            auto cross_h = [&](int jj, double va, double vb) -> Vec2 {
                double t = (vb != va) ? std::clamp((c - va) / (vb - va), 0.0, 1.0) : 0.5;
                return {n00.x + t * h, field.origin().y + jj * h};
            };
            auto cross_v = [&](int ii, double va, double vb) -> Vec2 {
                double t = (vb != va) ? std::clamp((c - va) / (vb - va), 0.0, 1.0) : 0.5;
                return {field.origin().x + ii * h, n00.y + t * h};
            };

            EdgeKey eb = h_edge(i, j, nx), et = h_edge(i, j + 1, nx);
            EdgeKey el = v_edge(i, j, nx), er = v_edge(i + 1, j, nx);
            Vec2 pb = cross_h(j, v00, v10), pt = cross_h(j + 1, v01, v11);
            Vec2 pl = cross_v(i, v00, v01), pr = cross_v(i + 1, v10, v11);

            auto seg = [&](EdgeKey a, Vec2 pa, EdgeKey b2, Vec2 pb2) {
                sink.add(a, pa, b2, pb2);
            };
            switch (mask) {
                case 1: case 14: seg(el, pl, eb, pb); break;
                case 2: case 13: seg(eb, pb, er, pr); break;
                case 3: case 12: seg(el, pl, er, pr); break;
                case 4: case 11: seg(er, pr, et, pt); break;
                case 6: case 9:  seg(eb, pb, et, pt); break;
                case 7: case 8:  seg(el, pl, et, pt); break;
                case 5: {
                    double center = 0.25 * (v00 + v10 + v11 + v01);
                    if (center >= c) {
                        seg(eb, pb, er, pr);
                        seg(el, pl, et, pt);
                    } else {
                        seg(el, pl, eb, pb);
                        seg(er, pr, et, pt);
                    }
                    break;
                }
                case 10: {
                    double center = 0.25 * (v00 + v10 + v11 + v01);
                    if (center >= c) {
                        seg(el, pl, eb, pb);
                        seg(er, pr, et, pt);
                    } else {
                        seg(eb, pb, er, pr);
                        seg(el, pl, et, pt);
                    }
                    break;
                }
                default: break;
            }
        }
    }

    for (const auto& [key, nbrs] : sink.adj) {
        if (nbrs.size() > 2) {
            std::ostringstream os;
            os << "extract_level: level set is not a simple arc near (" <<
                sink.point[key].x << ", " << sink.point[key].y << ")";
            throw std::runtime_error(os.str());
        }
    }

    // Walk open chains from degree-1 edges.
    std::map<EdgeKey, bool> visited;
    std::vector<std::vector<Vec2>> chains;
    for (const auto& [key, nbrs] : sink.adj) {
        if (nbrs.size() != 1 || visited[key]) continue;
        std::vector<Vec2> chain;
        EdgeKey cur = key, prev = -1;
        while (true) {
            visited[cur] = true;
            chain.push_back(sink.point[cur]);
            EdgeKey next = -1;
            for (EdgeKey nb : sink.adj[cur])
                if (nb != prev) next = nb;
            if (next < 0 || visited[next]) break;
            prev = cur;
            cur = next;
        }
        chains.push_back(std::move(chain));
    }
    for (const auto& [key, nbrs] : sink.adj) {
        if (!visited[key]) throw ClosedLoopError(sink.point.at(key));
    }

    // Clip chains to the shape, orient them, and assign boundary arcs.
    std::vector<LevelCurve> out;
    const double perim = shape.perimeter();
    const double param_tol = std::max(4.0 * h / perim, 8.0 / std::max<std::size_t>(d.samples.size(), 8));
    for (auto& raw : chains) {
        std::vector<Vec2> pts;
        for (const Vec2& p : raw)
            if (pts.empty() || dist(pts.back(), p) > 1e-13) pts.push_back(p);
        if (pts.size() < 2) continue;

        // Longest run of in-shape vertices, with boundary crossings appended.
        std::vector<std::pair<int, int>> runs;
        int run_start = -1;
        for (int i = 0; i <= static_cast<int>(pts.size()); ++i) {
            bool in = i < static_cast<int>(pts.size()) && shape.contains(pts[i], 1e-12);
            if (in && run_start < 0) run_start = i;
            if (!in && run_start >= 0) {
                runs.push_back({run_start, i - 1});
                run_start = -1;
            }
        }
        if (runs.empty()) continue;
        auto [a, b] = *std::max_element(runs.begin(), runs.end(), [](auto x, auto y) {
            return x.second - x.first < y.second - y.first;
        });
        std::vector<Vec2> clipped;
        if (a > 0) clipped.push_back(shape.clip_to_boundary(pts[a], pts[a - 1]));
        clipped.insert(clipped.end(), pts.begin() + a, pts.begin() + b + 1);
        if (b + 1 < static_cast<int>(pts.size()))
            clipped.push_back(shape.clip_to_boundary(pts[b], pts[b + 1]));

        std::vector<Vec2> dedup;
        for (const Vec2& p : clipped)
            if (dedup.empty() || dist(dedup.back(), p) > 1e-13) dedup.push_back(p);
        if (dedup.size() < 2) continue;

        LevelCurve lc;
        lc.c = c;
        lc.curve = Polyline(std::move(dedup));
        if (dist(lc.curve.front(), lc.curve.back()) < 0.25 * h)
            throw ClosedLoopError(lc.curve.front());

        double s0 = shape.boundary_param(lc.curve.front());
        double s1 = shape.boundary_param(lc.curve.back());
        int a0 = d.monotone_arc_near(s0, param_tol);
        int a1 = d.monotone_arc_near(s1, param_tol);
        if (a0 < 0 || a1 < 0)
            throw std::runtime_error("extract_level: chain endpoint not on a monotone arc");
        if (a0 == a1)
            throw std::runtime_error(
                "extract_level: chain endpoints on the same monotone arc");
        if (d.n_f == 2 && a0 == d.ascending_arc()) {
            lc.curve.reverse();
            std::swap(a0, a1);
        }
        lc.start_arc = a0;
        lc.end_arc = a1;
        out.push_back(std::move(lc));
    }
    return out;
}

LevelFamily level_family(const ScalarField& field, const BoundaryDecomposition& d,
                         int count, const RunConfig& cfg) {
    if (count < 2) throw std::invalid_argument("level_family: count must be >= 2");
    LevelFamily fam;
    fam.grid_h = field.h();
    const double lo = field.min_value(), hi = field.max_value();

    auto boundary_curve = [&](int arc_index) {
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
    };

    for (int j = 0; j < count; ++j) {
        double c = lo + (hi - lo) * j / (count - 1);
        fam.levels.push_back(c);
        if (j == 0) {
            fam.curves.push_back(boundary_curve(d.min_level_arc()));
        } else if (j == count - 1) {
            fam.curves.push_back(boundary_curve(d.max_level_arc()));
        } else {
            auto curves = extract_level(field, d, c, cfg);
            if (curves.size() != 1) {
                std::ostringstream os;
                os << "level_family: level " << c << " has " << curves.size()
                   << " components (field not weakly regular)";
                throw std::runtime_error(os.str());
            }
            fam.curves.push_back(std::move(curves.front()));
        }
    }
    return fam;
}

std::vector<std::pair<double, double>> frechet_continuity_profile(const LevelFamily& fam) {
    if (fam.curves.size() < 3)
        throw std::invalid_argument("frechet_continuity_profile: need >= 3 levels");
    std::vector<std::pair<double, double>> out;
    double spacing = fam.grid_h > 0.0 ? fam.grid_h : 1e-2;
    auto points_of = [&](const LevelCurve& lc) -> std::vector<Vec2> {
        if (lc.is_degenerate()) return {*lc.degenerate_point};
        return refine_polyline(lc.curve, spacing).pts;
    };
    for (std::size_t i = 1; i < fam.curves.size(); ++i) {
        double dc = std::abs(fam.levels[i] - fam.levels[i - 1]);
        double df = frechet_points(points_of(fam.curves[i - 1]), points_of(fam.curves[i]));
        out.push_back({dc, df});
    }
    return out;
}

}  // namespace levelrect
