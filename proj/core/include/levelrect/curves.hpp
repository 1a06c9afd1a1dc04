#pragma once

#include <vector>

#include "levelrect/geometry.hpp"

namespace levelrect {

/// An oriented planar polyline with at least two vertices and no repeated
/// consecutive vertices.
struct Polyline {
    std::vector<Vec2> pts;

    Polyline() = default;
    explicit Polyline(std::vector<Vec2> p) : pts(std::move(p)) {}

    int size() const { return static_cast<int>(pts.size()); }
    Vec2 front() const { return pts.front(); }
    Vec2 back() const { return pts.back(); }

    double length() const;
    /// Exact diameter of the support (the farthest vertex pair; segment
    /// interiors never exceed it).
    double diameter() const;
    void reverse();
};

/// True when no two non-adjacent segments come closer than tol.
bool polyline_is_simple(const Polyline& c, double tol);

/// Subdivides segments longer than max_spacing into equal pieces.
Polyline refine_polyline(const Polyline& c, double max_spacing);

/// mu_n: the largest d such that n+1 points can be placed along the curve, in
/// parameter order, with every consecutive pair at distance >= d. n = 1 is the
/// support diameter; for n >= 2 the value is found by binary search on d with
/// a greedy sweep that places each point at the first parameter reaching
/// distance d from the previous one (crossings solved exactly per segment).
double mu_n(const Polyline& c, int n);

/// Truncated series sum_{n>=1} mu_n / 2^n, cut off once the tail bound
/// diameter / 2^N drops below eps.
double mu_length(const Polyline& c, double eps);

/// A curve together with its cumulative mu-length table: mu_cumulative[i] is
/// the mu-length of the vertex prefix 0..i. The table is the canonical
/// parameterization shared by every reparameterization of the same support.
struct MuParamCurve {
    Polyline base;
    std::vector<double> mu_cumulative;
    double mu_total = 0.0;
};

MuParamCurve mu_parameterize(const Polyline& c);

/// k points at equal mu increments, located by inverse interpolation of the
/// cumulative table. Endpoints coincide with the curve endpoints.
Polyline resample_by_mu(const MuParamCurve& c, int k);

/// Discrete Frechet distance between the vertex sequences (monotone coupling
/// dynamic program). Symmetric; converges to the continuous value under
/// refinement.
double frechet(const Polyline& a, const Polyline& b);

/// Frechet distance where either argument may be a single point.
double frechet_points(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

}  // namespace levelrect
