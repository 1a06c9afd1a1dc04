#pragma once

#include <string>

#include "levelrect/levelsets.hpp"
#include "levelrect/rectify.hpp"

namespace levelrect {

/// Level curves as colored polylines in a fixed 1024x1024 viewbox.
/// Output is a pure function of the input (byte-identical across runs).
std::string svg_levels(const LevelFamily& fam, const DomainShape& shape);

/// Warped lattice of a discrete homeomorphism as a quad mesh.
std::string svg_warp(const DiscreteHomeomorphism& H);

}  // namespace levelrect
