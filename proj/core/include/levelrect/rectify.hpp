#pragma once

#include <functional>
#include <string>
#include <vector>

#include "levelrect/config.hpp"
#include "levelrect/curves.hpp"
#include "levelrect/domain.hpp"
#include "levelrect/levelsets.hpp"
#include "levelrect/regularity.hpp"

namespace levelrect {

/// A sampled homeomorphism H : model -> domain, stored as the images of a
/// fiberwise-regular lattice on the model (`target_shape`); grid points live
/// in `source_shape`. Rows sit at equal model heights in [y_lo, y_hi],
/// columns at equal fiber fractions (fibers shrink to points at disk poles).
/// The map rectifies the field when f(H(x, y)) ~ a*y + b.
struct DiscreteHomeomorphism {
    DomainShape source_shape = DomainShape::square();
    DomainShape target_shape = DomainShape::square();
    int k = 0, m = 0;
    double y_lo = 0.0, y_hi = 1.0;
    std::vector<Vec2> grid;  // row-major: grid[j*k + i]
    double residual = 0.0;
    bool orientation_ok = false;
    double a = 1.0, b = 0.0;

    Vec2 at(int i, int j) const { return grid[static_cast<std::size_t>(j) * k + i]; }
    double row_height(int j) const { return y_lo + (y_hi - y_lo) * j / (m - 1); }

    static double fiber_halfwidth(const DomainShape& model, double y);
    static double fiber_center(const DomainShape& model);
    Vec2 lattice_point(int i, int j) const;

    /// Bilinear interpolation in (fiber fraction, height) lattice coordinates.
    Vec2 eval(Vec2 model_pt) const;
    /// Positive signed area of every mapped lattice quad (quads degenerate to
    /// triangles at disk poles).
    bool check_orientation() const;
    /// Independent re-evaluation of max |f(H(x,y)) - (a*y + b)|.
    double recompute_residual(const ScalarField& f) const;
};

/// A horizontal band of the construction: the strip between two level curves,
/// mapped onto the model slab y in [y0, y1].
struct Band {
    DomainShape model = DomainShape::square();
    double y0 = 0.0, y1 = 1.0;  // model height interval
    double f0 = 0.0, f1 = 1.0;  // field values on the lower/upper curves
    MuParamCurve lower, upper;
};

/// Fiberwise-affine chart G(x, t) = (x, t*beta(x) + (1-t)*alpha(x)) between
/// the rectangle [x0, x1] x [0, 1] and the region between two graphs. With
/// `transposed` the roles of the axes swap: fibers run horizontally,
/// G(t, y) = (t*beta(y) + (1-t)*alpha(y), y).
class BandChart {
public:
    BandChart(std::function<double(double)> alpha, std::function<double(double)> beta,
              double x0, double x1, bool transposed = false);
    /// G: rectangle -> band.
    Vec2 from_unit(Vec2 q) const;
    /// G^{-1}: band -> rectangle (affine along each fiber).
    Vec2 to_unit(Vec2 p) const;
    double x0() const { return x0_; }
    double x1() const { return x1_; }

private:
    std::function<double(double)> alpha_, beta_;
    double x0_, x1_;
    bool transposed_;
};

/// The chart flattening a band's model slab (fibers are the model chords).
BandChart band_chart(const Band& band);

/// Extracts the level curves bounding the model slab [y0, y1] and packages
/// them as a Band (target values from the homeomorphism's affine relation).
Band make_band(const ScalarField& field, const BoundaryDecomposition& d,
               const DomainShape& model, double a, double b, double y0, double y1,
               const RunConfig& cfg = {});

/// Rectification of a weakly regular field on the square with f = 0 on the
/// bottom edge and f = 1 on the top edge: H is the identity on those edges
/// and f(H(x, y)) = y.
DiscreteHomeomorphism rectify_square(const ScalarField& field, int m, int k,
                                     const RunConfig& cfg = {});

/// As rectify_square for general edge values f0 != f1: f(H(x,y)) =
/// (1-y) f0 + y f1.
DiscreteHomeomorphism rectify_affine(const ScalarField& field, int m, int k,
                                     const RunConfig& cfg = {});

/// Rectifies a single band: lattice rows span [band.y0, band.y1], the lower
/// and upper rows are the band's own curves.
DiscreteHomeomorphism rectify_band(const ScalarField& field, const Band& band, int k,
                                   int rows, const RunConfig& cfg = {});

/// Half-disk model: the non-degenerate level arc becomes the diameter, the
/// single boundary extremum v becomes (0, 1). Levels approach v geometrically
/// and the residual cap (diameter <= eps_cap) is mapped by a fan collapsing
/// to v.
DiscreteHomeomorphism rectify_half_disk(const ScalarField& field, double eps_cap,
                                        int k, int m, const RunConfig& cfg = {});

/// Disk model: boundary extrema v-, v+ map to (0,-1), (0,1) and
/// f(H(x, y)) = ((1-y) f(v-) + (1+y) f(v+)) / 2. Built from the two
/// half-disk-style constructions glued along the middle level.
DiscreteHomeomorphism rectify_disk(const ScalarField& field, double eps_cap, int k,
                                   int m, const RunConfig& cfg = {});

/// Picks the model from the boundary decomposition: square when both level
/// arcs are non-degenerate, disk when both are points, half-disk otherwise.
DiscreteHomeomorphism rectify_auto(const ScalarField& field, const RunConfig& cfg = {});

/// Numerical inverse: lattice on H's source domain, preimages found by
/// mapped-quad location and bilinear back-interpolation.
DiscreteHomeomorphism invert(const DiscreteHomeomorphism& H);

}  // namespace levelrect
