#include "levelrect/json_io.hpp"

#include <fstream>

namespace levelrect {

namespace {

ordered_json vec_json(Vec2 p) { return ordered_json::array({p.x, p.y}); }

}  // namespace

ordered_json verdict_to_json(const RegularityVerdict& v, const BoundaryDecomposition& d) {
    ordered_json doc;
    doc["status"] = to_string(v.status);
    doc["n_f"] = v.n_f;
    ordered_json arcs = ordered_json::array();
    for (const auto& a : d.arcs) {
        ordered_json arc;
        arc["kind"] = a.kind == ArcKind::monotone ? "monotone" : "level";
        arc["s_begin"] = a.s_begin;
        arc["s_end"] = a.s_end;
        if (a.kind == ArcKind::level) {
            arc["level"] = a.level;
            arc["degenerate"] = a.degenerate;
        } else {
            arc["direction"] =
                a.direction == ArcDirection::increasing ? "increasing" : "decreasing";
        }
        arcs.push_back(arc);
    }
    doc["arcs"] = arcs;
    ordered_json failures = ordered_json::array();
    for (const auto& f : v.failures) {
        ordered_json rec;
        rec["condition"] = f.condition;
        rec["location"] = vec_json(f.where);
        rec["value"] = f.value;
        rec["message"] = f.message;
        failures.push_back(rec);
    }
    doc["failures"] = failures;
    ordered_json extrema = ordered_json::array();
    for (const Vec2& p : v.extremum_points) extrema.push_back(vec_json(p));
    doc["extremum_points"] = extrema;
    return doc;
}

ordered_json polyline_to_json(const Polyline& c) {
    ordered_json arr = ordered_json::array();
    for (const Vec2& p : c.pts) arr.push_back(vec_json(p));
    return arr;
}

Polyline polyline_from_json(const ordered_json& doc) {
    if (!doc.is_array()) throw std::runtime_error("curve JSON must be an array of [x, y]");
    Polyline out;
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 2)
            throw std::runtime_error("curve JSON must be an array of [x, y]");
        out.pts.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    return out;
}

ordered_json family_to_json(const LevelFamily& fam) {
    ordered_json doc;
    doc["kind"] = "level_family";
    doc["grid_h"] = fam.grid_h;
    doc["levels"] = fam.levels;
    ordered_json curves = ordered_json::array();
    for (const auto& lc : fam.curves) {
        ordered_json c;
        c["c"] = lc.c;
        if (lc.is_degenerate()) {
            c["degenerate"] = true;
            c["point"] = vec_json(*lc.degenerate_point);
        } else {
            c["degenerate"] = false;
            c["start_arc"] = lc.start_arc;
            c["end_arc"] = lc.end_arc;
            c["points"] = polyline_to_json(lc.curve);
        }
        curves.push_back(c);
    }
    doc["curves"] = curves;
    return doc;
}

LevelFamily family_from_json(const ordered_json& doc) {
    LevelFamily fam;
    fam.grid_h = doc.value("grid_h", 0.0);
    fam.levels = doc.at("levels").get<std::vector<double>>();
    for (const auto& c : doc.at("curves")) {
        LevelCurve lc;
        lc.c = c.at("c").get<double>();
        if (c.value("degenerate", false)) {
            lc.degenerate_point = Vec2{c.at("point")[0].get<double>(),
                                       c.at("point")[1].get<double>()};
        } else {
            lc.start_arc = c.value("start_arc", -1);
            lc.end_arc = c.value("end_arc", -1);
            lc.curve = polyline_from_json(c.at("points"));
        }
        fam.curves.push_back(std::move(lc));
    }
    return fam;
}

ordered_json homeo_to_json(const DiscreteHomeomorphism& H) {
    ordered_json doc;
    doc["kind"] = "homeomorphism";
    doc["source_shape"] = H.source_shape.name();
    doc["target_shape"] = H.target_shape.name();
    doc["k"] = H.k;
    doc["m"] = H.m;
    doc["y_lo"] = H.y_lo;
    doc["y_hi"] = H.y_hi;
    doc["a"] = H.a;
    doc["b"] = H.b;
    doc["residual"] = H.residual;
    doc["orientation_ok"] = H.orientation_ok;
    ordered_json rows = ordered_json::array();
    for (int j = 0; j < H.m; ++j) {
        ordered_json row = ordered_json::array();
        for (int i = 0; i < H.k; ++i) row.push_back(vec_json(H.at(i, j)));
        rows.push_back(row);
    }
    doc["grid"] = rows;
    return doc;
}

DiscreteHomeomorphism homeo_from_json(const ordered_json& doc) {
    DiscreteHomeomorphism H;
    H.source_shape = DomainShape::from_name(doc.at("source_shape").get<std::string>());
    H.target_shape = DomainShape::from_name(doc.at("target_shape").get<std::string>());
    H.k = doc.at("k").get<int>();
    H.m = doc.at("m").get<int>();
    H.y_lo = doc.at("y_lo").get<double>();
    H.y_hi = doc.at("y_hi").get<double>();
    H.a = doc.at("a").get<double>();
    H.b = doc.at("b").get<double>();
    H.residual = doc.at("residual").get<double>();
    H.orientation_ok = doc.at("orientation_ok").get<bool>();
    const auto& rows = doc.at("grid");
    if (static_cast<int>(rows.size()) != H.m)
        throw std::runtime_error("homeomorphism JSON: grid row count mismatch");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != H.k)
            throw std::runtime_error("homeomorphism JSON: grid column count mismatch");
        for (const auto& p : row)
            H.grid.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return H;
}

BoundaryMap boundary_map_from_json(const ordered_json& doc) {
    if (!doc.is_array())
        throw std::runtime_error("phi0 JSON must be an array of [s_source, s_target]");
    std::vector<std::pair<double, double>> pairs;
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 2)
            throw std::runtime_error("phi0 JSON must be an array of [s_source, s_target]");
        pairs.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    return BoundaryMap::from_pairs(std::move(pairs));
}

ordered_json conjugacy_report_to_json(const ConjugacyReport& rep) {
    ordered_json doc;
    doc["residual"] = rep.residual;
    doc["boundary_max_dev"] = rep.boundary_max_dev;
    doc["orientation_ok"] = rep.orientation_ok;
    doc["orientation_preserving"] = rep.orientation_preserving;
    doc["a"] = rep.a;
    doc["b"] = rep.b;
    return doc;
}

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ordered_json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    return doc;
}

void save_json(const ordered_json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc.dump(2) << "\n";
}

}  // namespace levelrect
