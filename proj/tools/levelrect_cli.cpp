// levelrect: analyze sampled scalar fields on disk-like domains, extract and
// mu-parameterize their level curves, build the rectifying homeomorphism, and
// extend boundary conjugacies.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "levelrect/config.hpp"
#include "levelrect/conjugacy.hpp"
#include "levelrect/curves.hpp"
#include "levelrect/domain.hpp"
#include "levelrect/json_io.hpp"
#include "levelrect/levelsets.hpp"
#include "levelrect/rectify.hpp"
#include "levelrect/regularity.hpp"
#include "levelrect/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAnalysis = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string config_path;
    double tol_level = -1, tol_mono = -1, tol_iso = -1, tol_rect = -1, tol_conj = -1;
    double eps_cap = -1, g_min = -1;
    int boundary_samples = -1;

    levelrect::RunConfig build() const {
        levelrect::RunConfig cfg;
        if (!config_path.empty()) cfg = levelrect::RunConfig::from_json_file(config_path);
        if (tol_level >= 0) cfg.tol_level = tol_level;
        if (tol_mono >= 0) cfg.tol_mono = tol_mono;
        if (tol_iso >= 0) cfg.tol_iso = tol_iso;
        if (tol_rect >= 0) cfg.tol_rect = tol_rect;
        if (tol_conj >= 0) cfg.tol_conj = tol_conj;
        if (eps_cap >= 0) cfg.eps_cap = eps_cap;
        if (g_min >= 0) cfg.g_min = g_min;
        if (boundary_samples > 0) cfg.boundary_sample_count = boundary_samples;
        cfg.validate();
        return cfg;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON RunConfig file");
    cmd->add_option("--tol-level", opts.tol_level, "level-arc tolerance");
    cmd->add_option("--tol-mono", opts.tol_mono, "monotonicity slack");
    cmd->add_option("--tol-iso", opts.tol_iso, "isocontour tolerance");
    cmd->add_option("--tol-rect", opts.tol_rect, "rectification residual tolerance");
    cmd->add_option("--tol-conj", opts.tol_conj, "conjugacy residual tolerance");
    cmd->add_option("--eps-cap", opts.eps_cap, "cap diameter for disk poles");
    cmd->add_option("--g-min", opts.g_min, "gradient threshold for regular points");
    cmd->add_option("--boundary-samples", opts.boundary_samples,
                    "boundary sample count for the decomposition");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int fail_usage(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
}

int fail_analysis(const std::exception& e) {
    std::cerr << "analysis failed: " << e.what() << "\n";
    return kExitAnalysis;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"level-curve analysis and rectification of scalar fields"};
    app.require_subcommand(1);

    // classify ---------------------------------------------------------------
    auto* classify_cmd = app.add_subcommand("classify", "boundary decomposition and regularity verdict");
    CommonOpts classify_opts;
    std::string classify_field, classify_out;
    classify_cmd->add_option("--field", classify_field, "field manifest JSON")->required();
    classify_cmd->add_option("--out", classify_out, "verdict JSON output path");
    add_common(classify_cmd, classify_opts);

    // levels -----------------------------------------------------------------
    auto* levels_cmd = app.add_subcommand("levels", "extract an ordered level-curve family");
    CommonOpts levels_opts;
    std::string levels_field, levels_out, levels_svg;
    int levels_count = 11;
    levels_cmd->add_option("--field", levels_field)->required();
    levels_cmd->add_option("--count,-n", levels_count, "number of levels");
    levels_cmd->add_option("--out", levels_out, "level family JSON output");
    levels_cmd->add_option("--svg", levels_svg, "optional SVG rendering");
    add_common(levels_cmd, levels_opts);

    // mu ---------------------------------------------------------------------
    auto* mu_cmd = app.add_subcommand("mu", "mu-length of a polyline curve");
    std::string mu_curve;
    double mu_eps = 1e-6;
    int mu_order = 0;
    mu_cmd->add_option("--curve", mu_curve, "curve JSON (array of [x, y])")->required();
    mu_cmd->add_option("--eps", mu_eps, "series truncation tolerance");
    mu_cmd->add_option("--n", mu_order, "also report mu_n for this n");

    // frechet ------------------------------------------------------------------
    auto* frechet_cmd = app.add_subcommand("frechet", "discrete Frechet distance of two curves");
    std::string fr_a, fr_b;
    frechet_cmd->add_option("--a", fr_a, "first curve JSON")->required();
    frechet_cmd->add_option("--b", fr_b, "second curve JSON")->required();

    // rectify ------------------------------------------------------------------
    auto* rectify_cmd = app.add_subcommand("rectify", "construct the rectifying homeomorphism");
    CommonOpts rectify_opts;
    std::string rect_field, rect_model = "auto", rect_out, rect_svg;
    int rect_levels = 33, rect_samples = 33;
    rectify_cmd->add_option("--field", rect_field)->required();
    rectify_cmd->add_option("--model", rect_model, "auto|square|half_disk|disk")
        ->check(CLI::IsMember({"auto", "square", "half_disk", "disk"}));
    rectify_cmd->add_option("--levels", rect_levels, "lattice rows");
    rectify_cmd->add_option("--samples", rect_samples, "lattice columns");
    rectify_cmd->add_option("--out", rect_out, "homeomorphism JSON output");
    rectify_cmd->add_option("--svg", rect_svg, "optional warped-lattice SVG");
    add_common(rectify_cmd, rectify_opts);

    // conjugate ----------------------------------------------------------------
    auto* conj_cmd = app.add_subcommand("conjugate", "extend a boundary conjugacy g o phi = f");
    CommonOpts conj_opts;
    std::string conj_f, conj_g, conj_phi0, conj_out;
    int conj_levels = 33, conj_samples = 33;
    conj_cmd->add_option("--f", conj_f, "source field manifest")->required();
    conj_cmd->add_option("--g", conj_g, "target field manifest")->required();
    conj_cmd->add_option("--phi0", conj_phi0, "boundary map JSON ([[s_src, s_tgt], ...])")->required();
    conj_cmd->add_option("--levels", conj_levels, "verification lattice rows");
    conj_cmd->add_option("--samples", conj_samples, "verification lattice columns");
    conj_cmd->add_option("--out", conj_out, "homeomorphism JSON output");
    add_common(conj_cmd, conj_opts);

    // render -------------------------------------------------------------------
    auto* render_cmd = app.add_subcommand("render", "SVG rendering of levels or a warped lattice");
    std::string render_in, render_out;
    render_cmd->add_option("--in", render_in, "level family or homeomorphism JSON")->required();
    render_cmd->add_option("--out", render_out, "SVG output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) {
            levelrect::RunConfig cfg;
            std::optional<levelrect::ScalarField> field;
            try {
                cfg = classify_opts.build();
                field = levelrect::load_field(classify_field);
            } catch (const std::exception& e) {
                return fail_usage(e);
            }
            levelrect::ordered_json doc;
            bool ok = false;
            try {
                auto d = levelrect::decompose_boundary(*field, cfg);
                auto verdict = levelrect::classify(*field, d, cfg);
                doc = levelrect::verdict_to_json(verdict, d);
                ok = verdict.status == levelrect::RegularityStatus::weakly_regular;
            } catch (const std::exception& e) {
                doc["status"] = "not_regular";
                doc["n_f"] = 0;
                doc["error"] = e.what();
            }
            std::cout << doc.dump(2) << "\n";
            if (!classify_out.empty()) levelrect::save_json(doc, classify_out);
            return ok ? kExitOk : kExitAnalysis;
        }

        if (levels_cmd->parsed()) {
            levelrect::RunConfig cfg;
            std::optional<levelrect::ScalarField> field;
            try {
                cfg = levels_opts.build();
                field = levelrect::load_field(levels_field);
            } catch (const std::exception& e) {
                return fail_usage(e);
            }
            try {
                auto d = levelrect::decompose_boundary(*field, cfg);
                auto fam = levelrect::level_family(*field, d, levels_count, cfg);
                auto doc = levelrect::family_to_json(fam);
                if (!levels_out.empty())
                    levelrect::save_json(doc, levels_out);
                else
                    std::cout << doc.dump(2) << "\n";
                if (!levels_svg.empty())
                    write_text(levels_svg, levelrect::svg_levels(fam, field->shape()));
            } catch (const std::exception& e) {
                return fail_analysis(e);
            }
            return kExitOk;
        }

        if (mu_cmd->parsed()) {
            levelrect::Polyline curve;
            try {
                curve = levelrect::polyline_from_json(levelrect::load_json(mu_curve));
            } catch (const std::exception& e) {
                return fail_usage(e);
            }
            levelrect::ordered_json doc;
            doc["mu_length"] = levelrect::mu_length(curve, mu_eps);
            doc["diameter"] = curve.diameter();
            if (mu_order >= 1) {
                doc["n"] = mu_order;
                doc["mu_n"] = levelrect::mu_n(curve, mu_order);
            }
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }

        if (frechet_cmd->parsed()) {
            levelrect::Polyline a, b;
            try {
                a = levelrect::polyline_from_json(levelrect::load_json(fr_a));
                b = levelrect::polyline_from_json(levelrect::load_json(fr_b));
            } catch (const std::exception& e) {
                return fail_usage(e);
            }
            levelrect::ordered_json doc;
            doc["frechet"] = levelrect::frechet(a, b);
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }

        if (rectify_cmd->parsed()) {
            levelrect::RunConfig cfg;
            std::optional<levelrect::ScalarField> field;
            try {
                cfg = rectify_opts.build();
                cfg.levels = rect_levels;
                cfg.samples = rect_samples;
                field = levelrect::load_field(rect_field);
            } catch (const std::exception& e) {
                return fail_usage(e);
            }
            try {
                levelrect::DiscreteHomeomorphism H;
                double eps_cap = cfg.resolved_eps_cap(*field);
                if (rect_model == "auto")
                    H = levelrect::rectify_auto(*field, cfg);
                else if (rect_model == "square")
                    H = levelrect::rectify_square(*field, rect_levels, rect_samples, cfg);
                else if (rect_model == "half_disk")
                    H = levelrect::rectify_half_disk(*field, eps_cap, rect_samples,
                                                     rect_levels, cfg);
                else
                    H = levelrect::rectify_disk(*field, eps_cap, rect_samples, rect_levels,
                                                cfg);
                auto doc = levelrect::homeo_to_json(H);
                if (!rect_out.empty())
                    levelrect::save_json(doc, rect_out);
                else
                    std::cout << doc.dump(2) << "\n";
                if (!rect_svg.empty()) write_text(rect_svg, levelrect::svg_warp(H));
            } catch (const std::exception& e) {
                return fail_analysis(e);
            }
            return kExitOk;
        }

        if (conj_cmd->parsed()) {
            levelrect::RunConfig cfg;
            std::optional<levelrect::ScalarField> f, g;
            levelrect::BoundaryMap phi0;
            try {
                cfg = conj_opts.build();
                cfg.levels = conj_levels;
                cfg.samples = conj_samples;
                f = levelrect::load_field(conj_f);
                g = levelrect::load_field(conj_g);
                phi0 = levelrect::boundary_map_from_json(levelrect::load_json(conj_phi0));
            } catch (const std::exception& e) {
                return fail_usage(e);
            }
            try {
                levelrect::ConjugacyReport rep;
                auto phi = levelrect::conjugate(*f, *g, phi0, cfg, &rep);
                auto doc = levelrect::homeo_to_json(phi);
                doc["report"] = levelrect::conjugacy_report_to_json(rep);
                if (!conj_out.empty())
                    levelrect::save_json(doc, conj_out);
                else
                    std::cout << doc.dump(2) << "\n";
            } catch (const std::exception& e) {
                return fail_analysis(e);
            }
            return kExitOk;
        }

        if (render_cmd->parsed()) {
            try {
                auto doc = levelrect::load_json(render_in);
                std::string svg;
                if (doc.value("kind", "") == "homeomorphism") {
                    svg = levelrect::svg_warp(levelrect::homeo_from_json(doc));
                } else if (doc.value("kind", "") == "level_family") {
                    // The family JSON does not store the shape; infer it from
                    // the curves' bounding box.
                    auto fam = levelrect::family_from_json(doc);
                    double min_x = 0.0, min_y = 0.0;
                    for (const auto& lc : fam.curves) {
                        if (lc.is_degenerate()) {
                            min_x = std::min(min_x, lc.degenerate_point->x);
                            min_y = std::min(min_y, lc.degenerate_point->y);
                            continue;
                        }
                        for (const auto& p : lc.curve.pts) {
                            min_x = std::min(min_x, p.x);
                            min_y = std::min(min_y, p.y);
                        }
                    }
                    auto shape = levelrect::DomainShape::square();
                    if (min_x < -0.01 && min_y < -0.01)
                        shape = levelrect::DomainShape::disk();
                    else if (min_x < -0.01)
                        shape = levelrect::DomainShape::half_disk();
                    svg = levelrect::svg_levels(fam, shape);
                } else {
                    throw std::runtime_error("unrecognized input JSON for render");
                }
                write_text(render_out, svg);
            } catch (const std::exception& e) {
                return fail_usage(e);
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        return fail_usage(e);
    }
    return kExitUsage;
}
