#include "levelrect/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "levelrect/domain.hpp"

namespace levelrect {

double Polyline::length() const {
    double L = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) L += dist(pts[i - 1], pts[i]);
    return L;
}

namespace {

// Lower convex hull helper for Andrew's monotone chain.
void half_hull(const std::vector<Vec2>& sorted, std::vector<Vec2>& out) {
    for (const Vec2& p : sorted) {
        while (out.size() >= 2 &&
               cross(out[out.size() - 1] - out[out.size() - 2], p - out[out.size() - 2]) <= 0.0)
            out.pop_back();
        out.push_back(p);
    }
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Vec2> lower, upper;
    half_hull(pts, lower);
    std::reverse(pts.begin(), pts.end());
    half_hull(pts, upper);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

}  // namespace

double Polyline::diameter() const {
    if (pts.size() < 2) return 0.0;
    auto hull = convex_hull(pts);
    double best = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j)
            best = std::max(best, dist_sq(hull[i], hull[j]));
    return std::sqrt(best);
}

void Polyline::reverse() { std::reverse(pts.begin(), pts.end()); }

bool polyline_is_simple(const Polyline& c, double tol) {
    const auto& v = c.pts;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        for (std::size_t j = i + 2; j + 1 < v.size(); ++j) {
            if (segments_intersect(v[i], v[i + 1], v[j], v[j + 1], tol)) return false;
        }
    }
    return true;
}

Polyline refine_polyline(const Polyline& c, double max_spacing) {
    if (max_spacing <= 0.0) throw std::invalid_argument("refine: spacing must be > 0");
    Polyline out;
    if (c.pts.empty()) return out;
    out.pts.push_back(c.pts.front());
    for (std::size_t i = 1; i < c.pts.size(); ++i) {
        Vec2 a = c.pts[i - 1], b = c.pts[i];
        int pieces = std::max(1, static_cast<int>(std::ceil(dist(a, b) / max_spacing)));
        for (int p = 1; p <= pieces; ++p)
            out.pts.push_back(lerp(a, b, static_cast<double>(p) / pieces));
    }
    return out;
}

namespace {

// Advances (seg, t) to the first parameter where the distance from `from`
// reaches d. dist^2 is a convex quadratic on each segment, so the first
// upward crossing is the larger root.
bool next_crossing(const std::vector<Vec2>& v, std::size_t& seg, double& t, Vec2 from,
                   double d) {
    for (; seg + 1 < v.size(); ++seg, t = 0.0) {
        Vec2 a = v[seg], b = v[seg + 1];
        if (dist(lerp(a, b, t), from) >= d) return true;
        Vec2 ab = b - a;
        double A = dot(ab, ab);
        if (A <= 0.0) continue;
        Vec2 w = a - from;
        double B = 2.0 * dot(w, ab);
        double C = dot(w, w) - d * d;
        double disc = B * B - 4.0 * A * C;
        if (disc < 0.0) continue;
        double root = (-B + std::sqrt(disc)) / (2.0 * A);
        if (root >= t && root <= 1.0) {
            t = root;
            return true;
        }
    }
    return false;
}

bool chain_feasible(const std::vector<Vec2>& v, int n, double d) {
    std::size_t seg = 0;
    double t = 0.0;
    Vec2 from = v.front();
    for (int placed = 1; placed <= n; ++placed) {
        if (!next_crossing(v, seg, t, from, d)) return false;
        from = lerp(v[seg], v[seg + 1], t);
    }
    return true;
}

}  // namespace

double mu_n(const Polyline& c, int n) {
    if (n < 1) throw std::invalid_argument("mu_n: n must be >= 1");
    if (c.size() < 2) return 0.0;
    double diam = c.diameter();
    if (n == 1 || diam == 0.0) return diam;
    double lo = 0.0, hi = diam;
    if (chain_feasible(c.pts, n, hi)) return hi;
    for (int it = 0; it < 40; ++it) {
        double mid = 0.5 * (lo + hi);
        if (chain_feasible(c.pts, n, mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

double mu_length(const Polyline& c, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("mu_length: eps must be > 0");
    if (c.size() < 2) return 0.0;
    double diam = c.diameter();
    if (diam == 0.0) return 0.0;
    int N = static_cast<int>(std::ceil(std::log2(diam / eps)));
    N = std::clamp(N, 1, 48);
    double sum = diam / 2.0;
    double w = 0.25;
    for (int n = 2; n <= N; ++n, w *= 0.5) sum += w * mu_n(c, n);
    return sum;
}

MuParamCurve mu_parameterize(const Polyline& c) {
    if (c.size() < 2) throw std::invalid_argument("mu_parameterize: need >= 2 vertices");
    const int V = c.size();
    std::vector<double> s(V, 0.0);
    for (int i = 1; i < V; ++i) s[i] = s[i - 1] + dist(c.pts[i - 1], c.pts[i]);
    double L = s.back();
    double eps_mu = std::max(1e-12, 1e-6 * L);

    // Exact prefix mu-lengths at checkpoints, linear in arc length between
    // them. The prefix mu-length is 1-Lipschitz in arc length, so the
    // interpolation error stays below the checkpoint spacing.
    constexpr int kMaxCheckpoints = 64;
    std::vector<int> cps;
    if (V <= kMaxCheckpoints + 1) {
        for (int i = 0; i < V; ++i) cps.push_back(i);
    } else {
        cps.push_back(0);
        for (int t = 1; t < kMaxCheckpoints; ++t) {
            double target = L * t / kMaxCheckpoints;
            int i = static_cast<int>(std::lower_bound(s.begin(), s.end(), target) - s.begin());
            i = std::clamp(i, 1, V - 2);
            if (i > cps.back()) cps.push_back(i);
        }
        if (cps.back() != V - 1) cps.push_back(V - 1);
    }

    std::vector<double> mu(V, 0.0);
    std::vector<double> cp_mu(cps.size(), 0.0);
    for (std::size_t ci = 1; ci < cps.size(); ++ci) {
        Polyline prefix;
        prefix.pts.assign(c.pts.begin(), c.pts.begin() + cps[ci] + 1);
        cp_mu[ci] = mu_length(prefix, eps_mu);
    }
    for (std::size_t ci = 1; ci < cps.size(); ++ci) {
        int a = cps[ci - 1], b = cps[ci];
        double span = s[b] - s[a];
        for (int i = a + 1; i <= b; ++i) {
            double t = span > 0.0 ? (s[i] - s[a]) / span : 1.0;
            mu[i] = cp_mu[ci - 1] + t * (cp_mu[ci] - cp_mu[ci - 1]);
        }
    }
    for (int i = 1; i < V; ++i) mu[i] = std::max(mu[i], mu[i - 1]);

    MuParamCurve out;
    out.base = c;
    out.mu_cumulative = std::move(mu);
    out.mu_total = out.mu_cumulative.back();
    return out;
}

Polyline resample_by_mu(const MuParamCurve& c, int k) {
    if (k < 2) throw std::invalid_argument("resample_by_mu: k must be >= 2");
    if (!(c.mu_total > 0.0))
        throw std::runtime_error("resample_by_mu: degenerate curve (zero mu-length)");
    const auto& mu = c.mu_cumulative;
    const auto& v = c.base.pts;
    Polyline out;
    out.pts.reserve(k);
    out.pts.push_back(v.front());
    std::size_t seg = 0;
    for (int j = 1; j < k - 1; ++j) {
        double target = c.mu_total * j / (k - 1);
        while (seg + 2 < v.size() && mu[seg + 1] < target) ++seg;
        double span = mu[seg + 1] - mu[seg];
        double t = span > 0.0 ? (target - mu[seg]) / span : 0.0;
        out.pts.push_back(lerp(v[seg], v[seg + 1], std::clamp(t, 0.0, 1.0)));
    }
    out.pts.push_back(v.back());
    return out;
}

double frechet_points(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("frechet: empty curve");
    const std::size_t na = a.size(), nb = b.size();
    std::vector<double> prev(nb), cur(nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            double d = dist(a[i], b[j]);
            double reach;
            if (i == 0 && j == 0) {
                reach = d;
            } else if (i == 0) {
                reach = std::max(cur[j - 1], d);
            } else if (j == 0) {
                reach = std::max(prev[0], d);
            } else {
                reach = std::max(std::min({prev[j], cur[j - 1], prev[j - 1]}), d);
            }
            cur[j] = reach;
        }
        std::swap(prev, cur);
    }
    return prev[nb - 1];
}

double frechet(const Polyline& a, const Polyline& b) {
    return frechet_points(a.pts, b.pts);
}

}  // namespace levelrect
