#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "levelrect/config.hpp"
#include "levelrect/curves.hpp"
#include "levelrect/domain.hpp"
#include "levelrect/regularity.hpp"

namespace levelrect {

/// Thrown when a level set contains a closed loop, which a weakly regular
/// field cannot have. Callers use it to downgrade the verdict.
struct ClosedLoopError : std::runtime_error {
    explicit ClosedLoopError(Vec2 where)
        : std::runtime_error("closed loop found in level set"), location(where) {}
    Vec2 location;
};

/// One connected component of a level set: an open simple curve whose
/// endpoints sit on two distinct monotone boundary arcs, or a degenerate
/// single point at a boundary extremum.
struct LevelCurve {
    double c = 0.0;
    Polyline curve;
    int start_arc = -1;
    int end_arc = -1;
    std::optional<Vec2> degenerate_point;

    bool is_degenerate() const { return degenerate_point.has_value(); }
};

/// Marching-squares extraction of the level set f = c, chained into maximal
/// polylines, clipped to the domain shape, and oriented so that each curve
/// starts on the descending monotone arc. Closed components raise
/// ClosedLoopError.
std::vector<LevelCurve> extract_level(const ScalarField& field,
                                      const BoundaryDecomposition& d, double c,
                                      const RunConfig& cfg = {});

/// An ordered family of consistently oriented level curves.
struct LevelFamily {
    std::vector<double> levels;
    std::vector<LevelCurve> curves;
    double grid_h = 0.0;
};

/// `count` equally spaced levels spanning [min f, max f]; the endpoint levels
/// are the boundary level arcs themselves (possibly degenerate points).
/// Requires a weakly regular field: every interior level must produce exactly
/// one component.
LevelFamily level_family(const ScalarField& field, const BoundaryDecomposition& d,
                         int count, const RunConfig& cfg = {});

/// (|delta c|, Frechet distance) for consecutive curve pairs of the family.
std::vector<std::pair<double, double>> frechet_continuity_profile(const LevelFamily& fam);

}  // namespace levelrect
