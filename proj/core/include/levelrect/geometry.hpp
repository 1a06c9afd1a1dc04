#pragma once

#include <cmath>

namespace levelrect {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline double norm(Vec2 v) { return std::sqrt(norm_sq(v)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline double dist_sq(Vec2 a, Vec2 b) { return norm_sq(a - b); }

inline Vec2 lerp(Vec2 a, Vec2 b, double t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

/// Distance from p to the segment [a, b].
double point_segment_dist(Vec2 p, Vec2 a, Vec2 b);

/// Proper or touching intersection test for segments [a,b] and [c,d],
/// with a symmetric distance tolerance.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol);

}  // namespace levelrect
