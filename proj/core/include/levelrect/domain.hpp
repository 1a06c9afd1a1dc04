#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "levelrect/geometry.hpp"

namespace levelrect {

enum class ShapeKind { square, half_disk, disk };

/// One of the three model domains: the unit square [0,1]^2, the closed upper
/// unit half-disk, or the closed unit disk.
///
/// The boundary is parameterized by arc-length fraction s in [0,1), traversed
/// counter-clockwise from a fixed base point: the corner (1,0) for the square,
/// the corner a+ = (1,0) for the half-disk (arc first, then the diameter),
/// and (0,-1) for the disk.
class DomainShape {
public:
    static DomainShape square() { return DomainShape(ShapeKind::square); }
    static DomainShape half_disk() { return DomainShape(ShapeKind::half_disk); }
    static DomainShape disk() { return DomainShape(ShapeKind::disk); }
    static DomainShape from_name(const std::string& name);

    ShapeKind kind() const { return kind_; }
    const char* name() const;

    double perimeter() const;
    Vec2 bbox_min() const;
    Vec2 bbox_max() const;

    Vec2 boundary_point(double s) const;
    /// Parameter of the boundary point nearest to p (p is expected to lie on
    /// or near the boundary).
    double boundary_param(Vec2 p) const;

    bool contains(Vec2 p, double slack = 0.0) const;
    /// Max of the defining constraints: negative inside, positive outside.
    double boundary_defect(Vec2 p) const;
    /// Boundary crossing of the segment from an inside to an outside point,
    /// located by bisection.
    Vec2 clip_to_boundary(Vec2 inside, Vec2 outside) const;

    bool operator==(const DomainShape& o) const { return kind_ == o.kind_; }

private:
    explicit DomainShape(ShapeKind k) : kind_(k) {}
    ShapeKind kind_;
};

/// A scalar function sampled on a uniform square-cell grid covering the
/// bounding box of a model domain. Nodes carry an inside-domain mask; a
/// one-ring of ghost samples is extrapolated outside the mask so that
/// bilinear evaluation stays well defined up to the curved boundary.
///
/// Immutable after construction; all accessors are safe to call concurrently.
class ScalarField {
public:
    ScalarField(DomainShape shape, int nx, int ny, std::vector<double> values,
                std::optional<std::vector<std::uint8_t>> mask = std::nullopt);

    DomainShape shape() const { return shape_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double h() const { return h_; }
    Vec2 origin() const { return origin_; }

    Vec2 node_pos(int i, int j) const {
        return {origin_.x + i * h_, origin_.y + j * h_};
    }
    double value(int i, int j) const { return values_[idx(i, j)]; }
    bool in_mask(int i, int j) const { return mask_[idx(i, j)] != 0; }
    /// True where a sample or a ghost-extrapolated sample exists.
    bool usable(int i, int j) const { return usable_[idx(i, j)] != 0; }
    double ext_value(int i, int j) const { return ext_[idx(i, j)]; }

    double min_value() const { return min_v_; }
    double max_value() const { return max_v_; }
    double value_range() const { return max_v_ - min_v_; }
    /// Largest node-gradient norm over masked-in nodes.
    double max_gradient_norm() const { return max_grad_; }

    /// Bilinear interpolation of the four surrounding samples; exact at grid
    /// nodes. Throws if p lies outside the domain by more than half a cell.
    double eval(Vec2 p) const;

    /// Node gradients (central differences inside the mask, one-sided at the
    /// mask edge) blended bilinearly at p.
    Vec2 gradient(Vec2 p) const;
    Vec2 node_gradient(int i, int j) const;

private:
    int idx(int i, int j) const { return j * nx_ + i; }
    void validate_and_finish();
    void fill_ghosts();

    DomainShape shape_;
    int nx_ = 0, ny_ = 0;
    double h_ = 0.0;
    Vec2 origin_;
    std::vector<double> values_;
    std::vector<std::uint8_t> mask_;
    std::vector<double> ext_;
    std::vector<std::uint8_t> usable_;
    double min_v_ = 0.0, max_v_ = 0.0, max_grad_ = 0.0;
};

/// Loads a field-manifest JSON document:
///   {"shape": "square"|"half_disk"|"disk", "nx": int, "ny": int,
///    "values": "<csv path>", "mask": "<csv path>" (optional)}
/// CSV files are row-major with row index = increasing y. Relative paths are
/// resolved against the manifest's directory.
ScalarField load_field(const std::string& manifest_path);

/// Samples fn(x, y) on an n-per-unit-length grid over the shape's bounding
/// box (square: n x n, disk: n x n, half-disk: n x (n+1)/2).
ScalarField sample_field(DomainShape shape, int n,
                         const std::function<double(double, double)>& fn);

struct BoundarySample {
    double s;
    Vec2 p;
    double value;
};

/// m boundary samples at s = i/m, ordered by increasing s (counter-clockwise,
/// starting at the shape's base point).
std::vector<BoundarySample> boundary_samples(const ScalarField& field, int m);

}  // namespace levelrect
