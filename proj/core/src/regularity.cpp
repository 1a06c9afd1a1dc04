#include "levelrect/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "levelrect/levelsets.hpp"

namespace levelrect {

namespace {

double circ_dist(double a, double b) {
    double d = std::abs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

}  // namespace

double BoundaryArc::param_length() const {
    double len = s_end - s_begin;
    if (len < 0.0) len += 1.0;
    return len;
}

bool BoundaryArc::contains_param(double s, double tol) const {
    return param_distance(s) <= tol;
}

double BoundaryArc::param_distance(double s) const {
    s -= std::floor(s);
    double rel = s - s_begin;
    rel -= std::floor(rel);
    if (rel <= param_length()) return 0.0;
    return std::min(circ_dist(s, s_begin), circ_dist(s, s_end));
}

int BoundaryDecomposition::descending_arc() const {
    if (n_f != 2) throw std::logic_error("descending_arc requires n_f == 2");
    return 2;
}

int BoundaryDecomposition::min_level_arc() const {
    int best = -1;
    for (std::size_t k = 0; k < arcs.size(); ++k)
        if (arcs[k].kind == ArcKind::level &&
            (best < 0 || arcs[k].level < arcs[best].level))
            best = static_cast<int>(k);
    return best;
}

int BoundaryDecomposition::max_level_arc() const {
    int best = -1;
    for (std::size_t k = 0; k < arcs.size(); ++k)
        if (arcs[k].kind == ArcKind::level &&
            (best < 0 || arcs[k].level > arcs[best].level))
            best = static_cast<int>(k);
    return best;
}

int BoundaryDecomposition::monotone_arc_near(double s, double param_tol) const {
    int best = -1;
    double best_d = param_tol;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (arcs[k].kind != ArcKind::monotone) continue;
        double d = arcs[k].param_distance(s);
        if (d <= best_d) {
            best_d = d;
            best = static_cast<int>(k);
        }
    }
    return best;
}

std::vector<Vec2> BoundaryDecomposition::arc_points(const DomainShape& shape, int arc,
                                                    double max_spacing) const {
    const BoundaryArc& a = arcs.at(arc);
    if (a.degenerate) return {shape.boundary_point(a.s_begin)};
    double len = a.param_length() * shape.perimeter();
    int n = std::max(2, static_cast<int>(std::ceil(len / max_spacing)) + 1);
    std::vector<Vec2> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        double s = a.s_begin + a.param_length() * i / (n - 1);
        out.push_back(shape.boundary_point(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// decompose_boundary

namespace {

struct Run {
    int sym;    // +1, -1, 0
    int begin;  // first step index (into the rotated step array)
    int len;    // number of steps
};

}  // namespace

BoundaryDecomposition decompose_boundary(const ScalarField& field, int m,
                                         double tol_level, double tol_mono) {
    auto samples = boundary_samples(field, m);
    const double range = field.value_range();
    if (range <= 0.0)
        throw std::runtime_error("boundary not decomposable: constant field");
    const double eps_step = std::max(tol_mono, 1e-12 * range);

    std::vector<int> step(m);
    bool any_nonzero = false;
    for (int i = 0; i < m; ++i) {
        double d = samples[(i + 1) % m].value - samples[i].value;
        step[i] = std::abs(d) <= eps_step ? 0 : (d > 0.0 ? 1 : -1);
        any_nonzero |= step[i] != 0;
    }
    if (!any_nonzero)
        throw std::runtime_error("boundary not decomposable: boundary values constant");

    // Collapse single-step ties inside monotone stretches: an isolated 0
    // between equal signs is sampling noise, not a plateau.
    {
        std::vector<int> collapsed = step;
        for (int i = 0; i < m; ++i) {
            int prev = step[(i + m - 1) % m], next = step[(i + 1) % m];
            if (step[i] == 0 && prev != 0 && prev == next) collapsed[i] = prev;
        }
        step = std::move(collapsed);
    }

    // Rotate so index 0 starts a fresh run; then the linear run list has no
    // circular seam to merge.
    int rot = 0;
    for (int i = 0; i < m; ++i) {
        if (step[i] != step[(i + m - 1) % m]) {
            rot = i;
            break;
        }
    }
    auto step_at = [&](int i) { return step[(rot + i) % m]; };

    std::vector<Run> runs;
    for (int i = 0; i < m;) {
        int j = i;
        while (j < m && step_at(j) == step_at(i)) ++j;
        runs.push_back({step_at(i), i, j - i});
        i = j;
    }

    auto sample_of = [&](int rotated_index) -> const BoundarySample& {
        int i = ((rotated_index + rot) % m + m) % m;
        return samples[i];
    };

    // Turn runs into alternating arcs; a +/- junction with no plateau becomes
    // a degenerate level arc at the shared sample.
    struct ProtoArc {
        ArcKind kind;
        ArcDirection dir;
        int first_sample, last_sample;  // rotated sample indices, inclusive
        bool degenerate;
    };
    std::vector<ProtoArc> proto;
    const int R = static_cast<int>(runs.size());
    for (int r = 0; r < R; ++r) {
        const Run& run = runs[r];
        int first = run.begin, last = run.begin + run.len;  // samples
        if (run.sym == 0) {
            proto.push_back({ArcKind::level, ArcDirection::constant, first, last, false});
        } else {
            proto.push_back({ArcKind::monotone,
                             run.sym > 0 ? ArcDirection::increasing : ArcDirection::decreasing,
                             first, last, false});
        }
        const Run& next = runs[(r + 1) % R];
        if (run.sym != 0 && next.sym != 0) {
            if (run.sym == next.sym)
                throw std::runtime_error(
                    "boundary not decomposable: non-alternating structure");
            proto.push_back({ArcKind::level, ArcDirection::constant, last, last, true});
        }
    }
    if (proto.size() < 4 || proto.size() % 2 != 0)
        throw std::runtime_error("boundary not decomposable: fewer than four arcs");
    for (std::size_t k = 0; k < proto.size(); ++k) {
        bool lvl = proto[k].kind == ArcKind::level;
        bool lvl_next = proto[(k + 1) % proto.size()].kind == ArcKind::level;
        if (lvl == lvl_next)
            throw std::runtime_error("boundary not decomposable: non-alternating structure");
    }

    BoundaryDecomposition out;
    out.samples = samples;
    for (const ProtoArc& pa : proto) {
        BoundaryArc arc;
        arc.kind = pa.kind;
        arc.direction = pa.dir;
        arc.degenerate = pa.degenerate || pa.first_sample == pa.last_sample;
        arc.s_begin = sample_of(pa.first_sample).s;
        arc.s_end = sample_of(pa.last_sample).s;
        if (arc.kind == ArcKind::level) {
            double lo = sample_of(pa.first_sample).value, hi = lo;
            double sum = 0.0;
            int cnt = 0;
            for (int i = pa.first_sample; i <= pa.last_sample; ++i) {
                double v = sample_of(i).value;
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                sum += v;
                ++cnt;
            }
            if (hi - lo > tol_level)
                throw std::runtime_error(
                    "boundary not decomposable: plateau drifts beyond tol_level");
            arc.level = sum / cnt;
            arc.direction = ArcDirection::constant;
        }
        out.arcs.push_back(arc);
    }

    // Normalize: arcs[0] ascends out of the minimum level arc.
    int min_arc = -1;
    for (std::size_t k = 0; k < out.arcs.size(); ++k)
        if (out.arcs[k].kind == ArcKind::level &&
            (min_arc < 0 || out.arcs[k].level < out.arcs[min_arc].level))
            min_arc = static_cast<int>(k);
    int start = (min_arc + 1) % static_cast<int>(out.arcs.size());
    std::rotate(out.arcs.begin(), out.arcs.begin() + start, out.arcs.end());
    if (out.arcs[0].kind != ArcKind::monotone ||
        out.arcs[0].direction != ArcDirection::increasing)
        throw std::runtime_error(
            "boundary not decomposable: no ascending arc after the minimum plateau");

    out.n_f = static_cast<int>(out.arcs.size()) / 2;
    out.points.reserve(out.arcs.size());
    for (const auto& a : out.arcs) out.points.push_back(a.s_begin);
    return out;
}

BoundaryDecomposition decompose_boundary(const ScalarField& field, const RunConfig& cfg) {
    return decompose_boundary(field, cfg.resolved_boundary_samples(field),
                              cfg.resolved_tol_level(field), cfg.tol_mono);
}

// ---------------------------------------------------------------------------
// classify

const char* to_string(RegularityStatus s) {
    switch (s) {
        case RegularityStatus::weakly_regular: return "weakly_regular";
        case RegularityStatus::almost_weakly_regular: return "almost_weakly_regular";
        case RegularityStatus::not_regular: return "not_regular";
    }
    return "?";
}

namespace {

// Whether the bilinear reconstruction over cell (i, j) attains value c.
bool cell_contains_level(const ScalarField& f, int i, int j, double c, double tol) {
    if (!f.usable(i, j) || !f.usable(i + 1, j) || !f.usable(i, j + 1) ||
        !f.usable(i + 1, j + 1))
        return false;
    if (!f.in_mask(i, j) && !f.in_mask(i + 1, j) && !f.in_mask(i, j + 1) &&
        !f.in_mask(i + 1, j + 1))
        return false;
    double v00 = f.ext_value(i, j), v10 = f.ext_value(i + 1, j);
    double v01 = f.ext_value(i, j + 1), v11 = f.ext_value(i + 1, j + 1);
    double lo = std::min({v00, v10, v01, v11});
    double hi = std::max({v00, v10, v01, v11});
    return lo <= c + tol && hi >= c - tol;
}

}  // namespace

RegularityVerdict classify(const ScalarField& field, const BoundaryDecomposition& d,
                           const RunConfig& cfg) {
    RegularityVerdict v;
    v.n_f = d.n_f;
    const double g_min = cfg.resolved_g_min(field);
    const double tol_level = cfg.resolved_tol_level(field);
    const double h = field.h();
    bool interior_ok = true, level_ok = true, component_ok = true;

    // (a) gradient proxy at interior nodes.
    constexpr int kMaxRecorded = 64;
    int recorded = 0;
    for (int j = 1; j + 1 < field.ny(); ++j) {
        for (int i = 1; i + 1 < field.nx(); ++i) {
            if (!field.in_mask(i, j) || !field.in_mask(i - 1, j) ||
                !field.in_mask(i + 1, j) || !field.in_mask(i, j - 1) ||
                !field.in_mask(i, j + 1))
                continue;
            double g = norm(field.node_gradient(i, j));
            if (g < g_min) {
                interior_ok = false;
                if (recorded < kMaxRecorded)
                    v.failures.push_back({"interior_gradient", field.node_pos(i, j), g,
                                          "gradient below g_min at interior node"});
                ++recorded;
            }
        }
    }
    if (recorded > kMaxRecorded) {
        std::ostringstream os;
        os << (recorded - kMaxRecorded) << " more interior nodes below g_min";
        v.failures.push_back({"interior_gradient", {}, 0.0, os.str()});
    }

    // (b) level arcs stay level.
    for (std::size_t k = 0; k < d.arcs.size(); ++k) {
        const BoundaryArc& arc = d.arcs[k];
        if (arc.kind != ArcKind::level || arc.degenerate) continue;
        double lo = arc.level, hi = arc.level;
        for (const auto& smp : d.samples) {
            if (!arc.contains_param(smp.s, 0.0)) continue;
            lo = std::min(lo, smp.value);
            hi = std::max(hi, smp.value);
        }
        if (hi - lo > tol_level) {
            level_ok = false;
            v.failures.push_back({"level_arc_drift",
                                  field.shape().boundary_point(arc.s_begin), hi - lo,
                                  "level arc values drift beyond tol_level"});
        }
    }

    // (c) each level arc is a full component of its level set: flood the cells
    // whose bilinear range contains the arc level, starting from the arc, and
    // demand they stay within 2h of it.
    const double level_tol = 1e-9 * std::max(field.value_range(), 1.0);
    for (std::size_t k = 0; k < d.arcs.size(); ++k) {
        const BoundaryArc& arc = d.arcs[k];
        if (arc.kind != ArcKind::level) continue;
        auto arc_pts = d.arc_points(field.shape(), static_cast<int>(k), 0.5 * h);
        const double c = arc.level;
        const int cx = field.nx() - 1, cy = field.ny() - 1;
        auto cell_id = [&](int i, int j) { return j * cx + i; };
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(cx) * cy, 0);
        std::queue<std::pair<int, int>> q;
        for (const Vec2& p : arc_pts) {
            int i = std::clamp(static_cast<int>((p.x - field.origin().x) / h), 0, cx - 1);
            int j = std::clamp(static_cast<int>((p.y - field.origin().y) / h), 0, cy - 1);
            for (int dj = -1; dj <= 1; ++dj) {
                for (int di = -1; di <= 1; ++di) {
                    int ii = i + di, jj = j + dj;
                    if (ii < 0 || jj < 0 || ii >= cx || jj >= cy) continue;
                    if (seen[cell_id(ii, jj)]) continue;
                    if (!cell_contains_level(field, ii, jj, c, level_tol)) continue;
                    seen[cell_id(ii, jj)] = 1;
                    q.push({ii, jj});
                }
            }
        }
        bool extends = false;
        Vec2 worst{};
        double worst_d = 0.0;
        const int dx[4] = {1, -1, 0, 0};
        const int dy[4] = {0, 0, 1, -1};
        while (!q.empty()) {
            auto [i, j] = q.front();
            q.pop();
            Vec2 center = field.node_pos(i, j) + Vec2{0.5 * h, 0.5 * h};
            double dist_to_arc = std::numeric_limits<double>::infinity();
            for (const Vec2& p : arc_pts)
                dist_to_arc = std::min(dist_to_arc, dist(center, p));
            if (dist_to_arc > 2.0 * h + 0.75 * h) {
                extends = true;
                if (dist_to_arc > worst_d) {
                    worst_d = dist_to_arc;
                    worst = center;
                }
            }
            for (int t = 0; t < 4; ++t) {
                int ii = i + dx[t], jj = j + dy[t];
                if (ii < 0 || jj < 0 || ii >= cx || jj >= cy) continue;
                if (seen[cell_id(ii, jj)]) continue;
                if (!cell_contains_level(field, ii, jj, c, level_tol)) continue;
                seen[cell_id(ii, jj)] = 1;
                q.push({ii, jj});
            }
        }
        if (extends) {
            component_ok = false;
            v.failures.push_back({"level_component_extends", worst, worst_d,
                                  "level component extends into the interior beyond 2h"});
        }
    }

    for (const auto& arc : d.arcs)
        if (arc.kind == ArcKind::level && arc.degenerate)
            v.extremum_points.push_back(field.shape().boundary_point(arc.s_begin));

    if (!interior_ok || !level_ok)
        v.status = RegularityStatus::not_regular;
    else if (component_ok && d.n_f == 2)
        v.status = RegularityStatus::weakly_regular;
    else
        v.status = RegularityStatus::almost_weakly_regular;
    return v;
}

// ---------------------------------------------------------------------------
// U-trajectories

UTrajectory trace_u_trajectory(const ScalarField& field, Vec2 start, int direction,
                               double step, double max_len, const RunConfig& cfg) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("trace_u_trajectory: direction must be +1 or -1");
    if (step <= 0.0 || max_len <= 0.0)
        throw std::invalid_argument("trace_u_trajectory: step and max_len must be > 0");
    const double g_min = cfg.resolved_g_min(field);
    const double dir = static_cast<double>(direction);

    Vec2 g0 = field.gradient(start);
    if (norm(g0) < g_min)
        throw std::runtime_error("trace_u_trajectory: start in a gradient-degenerate zone");

    UTrajectory traj;
    traj.curve.pts.push_back(start);
    traj.values.push_back(field.eval(start));

    double traveled = 0.0;
    Vec2 p = start;
    double val = traj.values.back();
    const double target = dir > 0 ? field.max_value() : field.min_value();
    while (traveled < max_len) {
        if (std::abs(val - target) <= 1e-12 * std::max(1.0, field.value_range())) break;
        Vec2 g = field.gradient(p);
        double gn = norm(g);
        if (gn < g_min) break;  // entered a flat zone; stop at its rim
        Vec2 u = (dir / gn) * g;

        double cur_step = std::min(step, max_len - traveled);
        bool terminal = false;
        Vec2 q;
        double vq = val;
        int halvings = 0;
        for (;; ++halvings) {
            if (halvings > 8)
                throw std::runtime_error(
                    "trace_u_trajectory: step too large to maintain monotonicity");
            q = p + cur_step * u;
            terminal = false;
            if (!field.shape().contains(q, 0.0)) {
                q = field.shape().clip_to_boundary(p, q);
                terminal = true;
            }
            vq = field.eval(q);
            if (dir * (vq - val) > 0.0) break;
            if (terminal && std::abs(vq - val) <= 1e-14 * std::max(1.0, field.value_range()))
                break;  // boundary point at the same level: done
            cur_step *= 0.5;
        }
        traveled += dist(p, q);
        p = q;
        if (dir * (vq - val) > 0.0) {
            traj.curve.pts.push_back(p);
            traj.values.push_back(vq);
            val = vq;
        }
        if (terminal) break;
    }
    return traj;
}

// ---------------------------------------------------------------------------
// Equi-local-connectedness probe

double check_elc(const ScalarField& field, Vec2 v, double eps, int level_count,
                 const RunConfig& cfg) {
    if (eps <= 0.0) throw std::invalid_argument("check_elc: eps must be > 0");
    if (level_count < 1) throw std::invalid_argument("check_elc: level_count must be >= 1");

    BoundaryDecomposition d = decompose_boundary(field, cfg);
    const double lo = field.min_value(), hi = field.max_value();
    std::vector<Polyline> curves;
    for (int t = 0; t < level_count; ++t) {
        double c = lo + (hi - lo) * (t + 0.5) / level_count;
        try {
            for (auto& lc : extract_level(field, d, c, cfg))
                if (!lc.is_degenerate()) curves.push_back(lc.curve);
        } catch (const std::exception&) {
            // Diagnostic probe: skip levels that fail to extract cleanly.
        }
    }

    for (int k = 0; k <= 10; ++k) {
        double delta = eps / static_cast<double>(1 << k);
        bool ok = true;
        for (const Polyline& c : curves) {
            int first = -1, last = -1;
            for (int i = 0; i < c.size(); ++i) {
                if (dist(c.pts[i], v) < delta) {
                    if (first < 0) first = i;
                    last = i;
                }
            }
            if (first < 0 || first == last) continue;
            for (int i = first; i <= last && ok; ++i)
                if (dist(c.pts[i], v) >= eps) ok = false;
            if (!ok) break;
        }
        if (ok) return delta;
    }
    return 0.0;
}

}  // namespace levelrect
