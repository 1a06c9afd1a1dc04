#pragma once

#include <string>
#include <vector>

#include "levelrect/config.hpp"
#include "levelrect/curves.hpp"
#include "levelrect/domain.hpp"

namespace levelrect {

enum class ArcKind { monotone, level };
enum class ArcDirection { increasing, decreasing, constant };

/// A boundary arc [s_begin, s_end] (CCW, possibly wrapping past s = 1,
/// zero-length when degenerate).
struct BoundaryArc {
    double s_begin = 0.0;
    double s_end = 0.0;
    ArcKind kind = ArcKind::monotone;
    ArcDirection direction = ArcDirection::constant;
    double level = 0.0;  // meaningful for level arcs
    bool degenerate = false;

    double param_length() const;
    bool contains_param(double s, double tol) const;
    /// Circular parameter distance from s to the arc interval.
    double param_distance(double s) const;
};

/// The boundary split into 2n alternating arcs: odd positions (index 0, 2,
/// ...) strictly monotone, even positions level. Normalized so that arcs[0]
/// is the monotone arc ascending out of the minimum level arc; for n_f = 2
/// the order is: ascending, maximum level arc, descending, minimum level arc.
struct BoundaryDecomposition {
    std::vector<BoundaryArc> arcs;
    std::vector<double> points;  // z_k = arcs[k].s_begin, CCW
    int n_f = 0;
    std::vector<BoundarySample> samples;  // the samples the split was built from

    int ascending_arc() const { return 0; }
    int descending_arc() const;  // requires n_f == 2
    int min_level_arc() const;
    int max_level_arc() const;
    /// Index of the monotone arc nearest to boundary parameter s, or -1 when
    /// the distance exceeds param_tol.
    int monotone_arc_near(double s, double param_tol) const;
    /// Points along an arc at spacing <= max_spacing (arc length), including
    /// both endpoints. Degenerate arcs give a single point.
    std::vector<Vec2> arc_points(const DomainShape& shape, int arc,
                                 double max_spacing) const;
};

BoundaryDecomposition decompose_boundary(const ScalarField& field, int m,
                                         double tol_level, double tol_mono);
BoundaryDecomposition decompose_boundary(const ScalarField& field,
                                         const RunConfig& cfg = {});

enum class RegularityStatus { weakly_regular, almost_weakly_regular, not_regular };

const char* to_string(RegularityStatus s);

struct RegularityFailure {
    std::string condition;
    Vec2 where;
    double value = 0.0;
    std::string message;
};

struct RegularityVerdict {
    RegularityStatus status = RegularityStatus::not_regular;
    int n_f = 0;
    std::vector<RegularityFailure> failures;
    std::vector<Vec2> extremum_points;  // degenerate level-arc locations
};

/// Checks, against the decomposition of the same field:
///  (a) the gradient proxy |grad f| >= g_min at every interior node,
///  (b) every level arc stays in a level set within tol_level,
///  (c) every level arc is the whole connected component of its level set
///      (the component must not extend more than 2h away from the arc).
/// weakly_regular requires (a)+(b)+(c) and n_f == 2; (a)+(b) alone gives
/// almost_weakly_regular.
RegularityVerdict classify(const ScalarField& field, const BoundaryDecomposition& d,
                           const RunConfig& cfg = {});

/// A gradient flow line: a simple curve along which the field is strictly
/// monotone.
struct UTrajectory {
    Polyline curve;
    std::vector<double> values;
};

/// Normalized gradient ascent (direction = +1) or descent (-1) from start,
/// stopped at the domain boundary, at the field's extreme levels, or at
/// max_len. The step is halved (up to 8 times) whenever it would break
/// monotonicity.
UTrajectory trace_u_trajectory(const ScalarField& field, Vec2 start, int direction,
                               double step, double max_len, const RunConfig& cfg = {});

/// Empirical equi-local-connectedness margin at v: the largest delta from the
/// ladder eps, eps/2, ..., eps/2^10 such that on every extracted level curve,
/// whenever two curve points lie within delta of v the whole stretch between
/// them stays within eps of v. Returns 0 when even the smallest candidate
/// fails.
double check_elc(const ScalarField& field, Vec2 v, double eps, int level_count,
                 const RunConfig& cfg = {});

}  // namespace levelrect
