#include "levelrect/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace levelrect {

double RunConfig::resolved_tol_level(const ScalarField& f) const {
    if (tol_level >= 0.0) return tol_level;
    return std::max(2.0 * f.value_range() * f.h(), 1e-12);
}

double RunConfig::resolved_tol_iso(const ScalarField& f) const {
    if (tol_iso >= 0.0) return tol_iso;
    return std::max(2.0 * f.h() * f.max_gradient_norm(), 1e-12);
}

double RunConfig::resolved_tol_rect(const ScalarField& f) const {
    if (tol_rect >= 0.0) return tol_rect;
    return 3.0 * f.h() * (1.0 + f.max_gradient_norm());
}

double RunConfig::resolved_tol_conj(const ScalarField& f) const {
    if (tol_conj >= 0.0) return tol_conj;
    return 3.0 * f.h();
}

double RunConfig::resolved_eps_cap(const ScalarField& f) const {
    if (eps_cap >= 0.0) return eps_cap;
    return 4.0 * f.h();
}

double RunConfig::resolved_g_min(const ScalarField& f) const {
    if (g_min >= 0.0) return g_min;
    double amax = std::max(std::abs(f.min_value()), std::abs(f.max_value()));
    return 10.0 * std::numeric_limits<double>::epsilon() * amax / f.h();
}

int RunConfig::resolved_boundary_samples(const ScalarField& f) const {
    if (boundary_sample_count > 0) return boundary_sample_count;
    return std::max(256, 4 * (f.nx() + f.ny()));
}

void RunConfig::validate() const {
    if (tol_mono < 0.0) throw std::runtime_error("tol_mono must be >= 0");
    if (levels < 2) throw std::runtime_error("levels must be >= 2");
    if (samples < 2) throw std::runtime_error("samples must be >= 2");
    if (count < 2) throw std::runtime_error("count must be >= 2");
    for (double t : {tol_level, tol_iso, tol_rect, tol_conj, eps_cap, g_min})
        if (t == 0.0) throw std::runtime_error("explicit tolerances must be > 0");
}

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed config: ") + e.what());
    }
    RunConfig cfg;
    auto get = [&](const char* key, auto& into) {
        if (doc.contains(key)) into = doc[key].get<std::decay_t<decltype(into)>>();
    };
    get("tol_level", cfg.tol_level);
    get("tol_mono", cfg.tol_mono);
    get("tol_iso", cfg.tol_iso);
    get("tol_rect", cfg.tol_rect);
    get("tol_conj", cfg.tol_conj);
    get("eps_cap", cfg.eps_cap);
    get("g_min", cfg.g_min);
    get("boundary_samples", cfg.boundary_sample_count);
    get("levels", cfg.levels);
    get("samples", cfg.samples);
    get("count", cfg.count);
    cfg.validate();
    return cfg;
}

}  // namespace levelrect
