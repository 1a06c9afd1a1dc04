#pragma once

#include <cmath>
#include <numbers>

#include "levelrect/domain.hpp"

namespace fixtures {

using levelrect::DomainShape;
using levelrect::ScalarField;

inline constexpr double kPi = std::numbers::pi;

// Square-domain fields ------------------------------------------------------

inline ScalarField y_square(int n = 129) {
    return sample_field(DomainShape::square(), n, [](double, double y) { return y; });
}

inline ScalarField y2_square(int n = 129) {
    return sample_field(DomainShape::square(), n, [](double, double y) { return y * y; });
}

inline ScalarField xy_square(int n = 129) {
    return sample_field(DomainShape::square(), n, [](double x, double y) { return x * y; });
}

// y with a sine warp that vanishes on the top and bottom edges.
inline ScalarField warped_square(int n = 129) {
    return sample_field(DomainShape::square(), n, [](double x, double y) {
        return y + 0.15 * std::sin(kPi * x) * y * (1.0 - y);
    });
}

inline ScalarField affine_square(int n = 129) {
    return sample_field(DomainShape::square(), n,
                        [](double, double y) { return 2.0 * y + 3.0; });
}

inline ScalarField y2_scaled_square(int n = 129) {
    return sample_field(DomainShape::square(), n,
                        [](double, double y) { return 3.0 + 2.0 * y * y; });
}

// Negative controls ----------------------------------------------------------

inline ScalarField plateau_square(int n = 129) {
    return sample_field(DomainShape::square(), n,
                        [](double, double y) { return std::min(y, 0.8); });
}

// Closed level loops around the interior minimum.
inline ScalarField bump_square(int n = 129) {
    return sample_field(DomainShape::square(), n, [](double x, double y) {
        return (x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5);
    });
}

// Almost weakly regular: f = y * t(x) has an intermediate boundary plateau on
// the top edge whose level component continues into the interior.
inline double staple_profile(double x) {
    return std::min(1.0, 0.5 + 1.5 * std::max(0.0, std::abs(x - 0.5) - 1.0 / 6.0));
}

inline ScalarField staple_square(int n = 129) {
    return sample_field(DomainShape::square(), n,
                        [](double x, double y) { return y * staple_profile(x); });
}

// Half-disk fields ------------------------------------------------------------

inline ScalarField y_half_disk(int n = 129) {
    return sample_field(DomainShape::half_disk(), n, [](double, double y) { return y; });
}

inline ScalarField y15_half_disk(int n = 129) {
    return sample_field(DomainShape::half_disk(), n,
                        [](double, double y) { return std::pow(std::max(y, 0.0), 1.5); });
}

// Disk fields ------------------------------------------------------------------

inline ScalarField y_disk(int n = 129) {
    return sample_field(DomainShape::disk(), n, [](double, double y) { return y; });
}

inline ScalarField y3_disk(int n = 129) {
    return sample_field(DomainShape::disk(), n, [](double, double y) { return y * y * y; });
}

inline ScalarField distorted_disk(int n = 129) {
    return sample_field(DomainShape::disk(), n, [](double x, double y) {
        return y + 0.1 * x * (1.0 - y * y);
    });
}

}  // namespace fixtures
