#pragma once

#include <utility>
#include <vector>

#include "levelrect/config.hpp"
#include "levelrect/domain.hpp"
#include "levelrect/rectify.hpp"

namespace levelrect {

/// A sampled boundary homeomorphism: pairs (s_source, s_target) of boundary
/// parameters, strictly monotone modulo 1 (increasing when orientation
/// preserving, decreasing otherwise).
struct BoundaryMap {
    std::vector<std::pair<double, double>> pairs;  // sorted by s_source
    bool orientation_preserving = true;

    /// Circular piecewise-linear interpolation of the target parameter.
    double apply(double s_source) const;
    BoundaryMap inverse() const;

    /// Validates monotonicity modulo 1 and infers the orientation.
    static BoundaryMap from_pairs(std::vector<std::pair<double, double>> pairs);
};

struct ConjugacyReport {
    double residual = 0.0;          // max |g(phi(p)) - f(p)| over the lattice
    double boundary_max_dev = 0.0;  // max deviation of phi|boundary from phi0
    bool orientation_ok = false;
    bool orientation_preserving = true;
    double a = 0.0, b = 0.0;        // shared affine data of the two fields
};

/// Extends phi0 to a homeomorphism phi with g(phi(p)) = f(p), through the
/// rectifications of both fields: phi = H_g o Psi o H_f^{-1}, where Psi is a
/// level-preserving extension of the induced model boundary map. The two
/// fields must rectify to the same model with matching affine data.
/// The returned map is stored on a lattice over f's domain (`target_shape`),
/// with values in g's domain.
DiscreteHomeomorphism conjugate(const ScalarField& f, const ScalarField& g,
                                const BoundaryMap& phi0, const RunConfig& cfg = {},
                                ConjugacyReport* report = nullptr);

/// Independent check of the two conjugacy equalities for a given phi.
ConjugacyReport verify_conjugacy(const ScalarField& f, const ScalarField& g,
                                 const DiscreteHomeomorphism& phi,
                                 const BoundaryMap& phi0);

}  // namespace levelrect
