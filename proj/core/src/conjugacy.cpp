#include "levelrect/conjugacy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace levelrect {

namespace {

double frac(double x) { return x - std::floor(x); }

}  // namespace

BoundaryMap BoundaryMap::from_pairs(std::vector<std::pair<double, double>> pairs) {
    if (pairs.size() < 3)
        throw std::invalid_argument("boundary map: need at least 3 parameter pairs");
    for (auto& [s, t] : pairs) {
        s = frac(s);
        t = frac(t);
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i - 1].first)
            throw std::invalid_argument("boundary map: duplicate source parameter");

    // Circular forward and backward winding of the target sequence; a
    // monotone map winds exactly once in one of the directions.
    const std::size_t n = pairs.size();
    double fwd = 0.0, bwd = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double t0 = pairs[i].second, t1 = pairs[(i + 1) % n].second;
        fwd += frac(t1 - t0);
        bwd += frac(t0 - t1);
    }
    BoundaryMap out;
    out.pairs = std::move(pairs);
    if (std::abs(fwd - 1.0) < 1e-9) {
        out.orientation_preserving = true;
    } else if (std::abs(bwd - 1.0) < 1e-9) {
        out.orientation_preserving = false;
    } else {
        throw std::invalid_argument("boundary map: parameters not monotone modulo 1");
    }
    return out;
}

double BoundaryMap::apply(double s) const {
    s = frac(s);
    const std::size_t n = pairs.size();
    // Bracketing source interval, circular.
    std::size_t lo = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (pairs[i].first <= s) lo = i;
    }
    std::size_t hi = (lo + 1) % n;
    double ds = frac(pairs[hi].first - pairs[lo].first);
    double off = frac(s - pairs[lo].first);
    double t = ds > 0.0 ? off / ds : 0.0;
    double t0 = pairs[lo].second;
    if (orientation_preserving) {
        double dt = frac(pairs[hi].second - t0);
        return frac(t0 + t * dt);
    }
    double dt = frac(t0 - pairs[hi].second);
    return frac(t0 - t * dt);
}

BoundaryMap BoundaryMap::inverse() const {
    std::vector<std::pair<double, double>> swapped;
    swapped.reserve(pairs.size());
    for (const auto& [s, t] : pairs) swapped.push_back({t, s});
    return from_pairs(std::move(swapped));
}

// ---------------------------------------------------------------------------

namespace {

// Level-preserving model extension of the induced boundary map: fiber
// fraction tau is blended between the bottom-edge map u0 and the top-edge map
// (u1 on the square; the identity or the flip at a disk pole).
struct ModelExtension {
    ShapeKind model;
    bool reversing = false;
    std::vector<double> u0, u1;  // sampled fiber-fraction maps

    double table(const std::vector<double>& u, double tau) const {
        double x = std::clamp(tau, 0.0, 1.0) * (u.size() - 1);
        std::size_t i = std::min(static_cast<std::size_t>(x), u.size() - 2);
        double t = x - i;
        return u[i] + t * (u[i + 1] - u[i]);
    }

    Vec2 apply(const DomainShape& shape, Vec2 q, double y_lo, double y_hi) const {
        double w = DiscreteHomeomorphism::fiber_halfwidth(shape, q.y);
        double cx = DiscreteHomeomorphism::fiber_center(shape);
        double tau = w > 1e-12 ? (q.x - (cx - w)) / (2.0 * w) : 0.5;
        tau = std::clamp(tau, 0.0, 1.0);
        double yn = std::clamp((q.y - y_lo) / (y_hi - y_lo), 0.0, 1.0);
        double tau2;
        switch (model) {
            case ShapeKind::square:
                tau2 = (1.0 - yn) * table(u0, tau) + yn * table(u1, tau);
                break;
            case ShapeKind::half_disk:
                tau2 = (1.0 - yn) * table(u0, tau) + yn * (reversing ? 1.0 - tau : tau);
                break;
            case ShapeKind::disk:
                tau2 = reversing ? 1.0 - tau : tau;
                break;
            default:
                tau2 = tau;
        }
        return {cx - w + 2.0 * w * tau2, q.y};
    }
};

// Samples the induced map psi0 = H_g^{-1} o phi0 o H_f along one horizontal
// model edge (y = height) and returns it as a fiber-fraction table.
std::vector<double> edge_map(const DiscreteHomeomorphism& Hf,
                             const DiscreteHomeomorphism& Hg_inv, const ScalarField& f,
                             const ScalarField& g, const BoundaryMap& phi0, double height,
                             double y_lo, double y_hi, bool reversing, int n_samples) {
    DomainShape model = Hf.target_shape;
    double w = DiscreteHomeomorphism::fiber_halfwidth(model, height);
    double cx = DiscreteHomeomorphism::fiber_center(model);
    std::vector<double> u(n_samples);
    for (int r = 0; r < n_samples; ++r) {
        double tau = static_cast<double>(r) / (n_samples - 1);
        Vec2 q{cx - w + 2.0 * w * tau, height};
        Vec2 p = Hf.eval(q);
        double s_src = f.shape().boundary_param(p);
        double s_tgt = phi0.apply(s_src);
        Vec2 p2 = g.shape().boundary_point(s_tgt);
        Vec2 q2 = Hg_inv.eval(p2);
        double w2 = DiscreteHomeomorphism::fiber_halfwidth(model, q2.y);
        double cx2 = DiscreteHomeomorphism::fiber_center(model);
        u[r] = w2 > 1e-12 ? std::clamp((q2.x - (cx2 - w2)) / (2.0 * w2), 0.0, 1.0)
                          : (reversing ? 1.0 - tau : tau);
    }
    // The sampled map must be monotone; numerical jitter is flattened out.
    if (reversing) std::reverse(u.begin(), u.end());
    u.front() = 0.0;
    u.back() = 1.0;
    for (int r = 1; r < n_samples; ++r) u[r] = std::max(u[r], u[r - 1]);
    if (reversing) std::reverse(u.begin(), u.end());
    return u;
}

}  // namespace

DiscreteHomeomorphism conjugate(const ScalarField& f, const ScalarField& g,
                                const BoundaryMap& phi0, const RunConfig& cfg,
                                ConjugacyReport* report) {
    const double tol_conj = cfg.resolved_tol_conj(f);

    // phi0 must already conjugate the boundary restrictions.
    for (const auto& [s_src, s_tgt] : phi0.pairs) {
        double vf = f.eval(f.shape().boundary_point(s_src));
        double vg = g.eval(g.shape().boundary_point(s_tgt));
        if (std::abs(vf - vg) > tol_conj) {
            std::ostringstream os;
            os << "conjugate: phi0 violates g o phi0 = f at s = " << s_src << " (|"
               << vg << " - " << vf << "| > " << tol_conj << ")";
            throw std::runtime_error(os.str());
        }
    }

    DiscreteHomeomorphism Hf = rectify_auto(f, cfg);
    DiscreteHomeomorphism Hg = rectify_auto(g, cfg);
    if (!(Hf.target_shape == Hg.target_shape))
        throw std::runtime_error("conjugate: fields rectify to different models");
    if (std::abs(Hf.a - Hg.a) + std::abs(Hf.b - Hg.b) >
        2.0 * cfg.resolved_tol_level(f))
        throw std::runtime_error("conjugate: affine data (a, b) of the fields differ");

    DiscreteHomeomorphism Hf_inv = invert(Hf);
    DiscreteHomeomorphism Hg_inv = invert(Hg);

    ModelExtension psi;
    psi.model = Hf.target_shape.kind();
    psi.reversing = !phi0.orientation_preserving;
    const int edge_samples = 129;
    if (psi.model == ShapeKind::square) {
        psi.u0 = edge_map(Hf, Hg_inv, f, g, phi0, 0.0, Hf.y_lo, Hf.y_hi, psi.reversing,
                          edge_samples);
        psi.u1 = edge_map(Hf, Hg_inv, f, g, phi0, 1.0, Hf.y_lo, Hf.y_hi, psi.reversing,
                          edge_samples);
    } else if (psi.model == ShapeKind::half_disk) {
        psi.u0 = edge_map(Hf, Hg_inv, f, g, phi0, 0.0, Hf.y_lo, Hf.y_hi, psi.reversing,
                          edge_samples);
    }

    DiscreteHomeomorphism phi;
    phi.source_shape = g.shape();   // values
    phi.target_shape = f.shape();   // lattice
    phi.k = cfg.samples;
    phi.m = cfg.levels;
    if (f.shape().kind() == ShapeKind::disk) {
        phi.y_lo = -1.0;
        phi.y_hi = 1.0;
    } else {
        phi.y_lo = 0.0;
        phi.y_hi = 1.0;
    }
    phi.a = 1.0;
    phi.b = 0.0;
    phi.grid.resize(static_cast<std::size_t>(phi.k) * phi.m);
    for (int j = 0; j < phi.m; ++j) {
        for (int i = 0; i < phi.k; ++i) {
            Vec2 p = phi.lattice_point(i, j);
            Vec2 q = Hf_inv.eval(p);
            Vec2 q2 = psi.apply(Hf.target_shape, q, Hf.y_lo, Hf.y_hi);
            phi.grid[static_cast<std::size_t>(j) * phi.k + i] = Hg.eval(q2);
        }
    }
    phi.orientation_ok = phi.check_orientation();

    ConjugacyReport rep = verify_conjugacy(f, g, phi, phi0);
    rep.orientation_preserving = phi0.orientation_preserving;
    rep.a = Hf.a;
    rep.b = Hf.b;
    phi.residual = rep.residual;
    if (report) *report = rep;
    return phi;
}

ConjugacyReport verify_conjugacy(const ScalarField& f, const ScalarField& g,
                                 const DiscreteHomeomorphism& phi,
                                 const BoundaryMap& phi0) {
    ConjugacyReport rep;
    for (int j = 0; j < phi.m; ++j) {
        for (int i = 0; i < phi.k; ++i) {
            Vec2 p = phi.lattice_point(i, j);
            Vec2 q = phi.at(i, j);
            rep.residual = std::max(rep.residual, std::abs(g.eval(q) - f.eval(p)));
        }
    }
    for (const auto& [s_src, s_tgt] : phi0.pairs) {
        Vec2 p = f.shape().boundary_point(s_src);
        Vec2 expect = g.shape().boundary_point(s_tgt);
        rep.boundary_max_dev = std::max(rep.boundary_max_dev, dist(phi.eval(p), expect));
    }
    rep.orientation_ok = phi.check_orientation();
    rep.orientation_preserving = phi0.orientation_preserving;
    return rep;
}

}  // namespace levelrect
