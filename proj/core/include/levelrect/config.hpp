#pragma once

#include <string>

#include "levelrect/domain.hpp"

namespace levelrect {

/// Tolerances and resolution knobs shared by the analysis pipeline.
/// Negative tolerance values mean "derive from the field":
///   tol_level = 2 * value_range * h
///   tol_iso   = 2h * max|grad f|
///   tol_rect  = 3h * (1 + max|grad f|)
///   tol_conj  = 3h
///   eps_cap   = 4h
///   g_min     = 10 * machine_eps * max|f| / h
struct RunConfig {
    double tol_level = -1.0;
    double tol_mono = 0.0;
    double tol_iso = -1.0;
    double tol_rect = -1.0;
    double tol_conj = -1.0;
    double eps_cap = -1.0;
    double g_min = -1.0;

    int boundary_sample_count = -1;  // -1: max(256, 4*(nx+ny))
    int levels = 33;                 // lattice rows (m)
    int samples = 33;                // lattice columns (k)
    int count = 11;                  // level-family size

    double resolved_tol_level(const ScalarField& f) const;
    double resolved_tol_iso(const ScalarField& f) const;
    double resolved_tol_rect(const ScalarField& f) const;
    double resolved_tol_conj(const ScalarField& f) const;
    double resolved_eps_cap(const ScalarField& f) const;
    double resolved_g_min(const ScalarField& f) const;
    int resolved_boundary_samples(const ScalarField& f) const;

    void validate() const;

    static RunConfig from_json_file(const std::string& path);
};

}  // namespace levelrect
