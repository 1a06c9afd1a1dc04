#pragma once

#include <nlohmann/json.hpp>

#include "levelrect/conjugacy.hpp"
#include "levelrect/curves.hpp"
#include "levelrect/levelsets.hpp"
#include "levelrect/rectify.hpp"
#include "levelrect/regularity.hpp"

namespace levelrect {

using ordered_json = nlohmann::ordered_json;

ordered_json verdict_to_json(const RegularityVerdict& v, const BoundaryDecomposition& d);

ordered_json family_to_json(const LevelFamily& fam);
LevelFamily family_from_json(const ordered_json& doc);

ordered_json homeo_to_json(const DiscreteHomeomorphism& H);
DiscreteHomeomorphism homeo_from_json(const ordered_json& doc);

ordered_json polyline_to_json(const Polyline& c);
Polyline polyline_from_json(const ordered_json& doc);

BoundaryMap boundary_map_from_json(const ordered_json& doc);

ordered_json conjugacy_report_to_json(const ConjugacyReport& rep);

ordered_json load_json(const std::string& path);
void save_json(const ordered_json& doc, const std::string& path);

}  // namespace levelrect
