#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "harmconv/criteria.hpp"
#include "harmconv/gallery.hpp"
#include "harmconv/json_io.hpp"
#include "harmconv/omega_spec.hpp"
#include "harmconv/svg.hpp"
#include "harmconv/verify.hpp"

namespace hc = harmconv;

namespace {

constexpr int kExitFailed = 2;
constexpr int kExitDegenerate = 3;

std::string fmt6(double x) {
    if (!std::isfinite(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const size_t dot = path.rfind('.');
    if (dot == std::string::npos)
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

hc::HarmonicMap expanded_for_eval(const hc::HarmonicMap& f, int order) {
    if (f.omega && f.order() < order)
        return hc::shear_slanted(f.gamma, *f.omega, order);
    return f;
}

double empirical_sup(const hc::RationalMap& r, double r_eval, int radial, int angular) {
    double sup = 0.0;
    for (int i = 1; i <= radial; ++i) {
        const double rr = r_eval * i / radial;
        for (int j = 0; j < angular; ++j) {
            try {
                sup = std::max(sup, std::abs(hc::eval(r, std::polar(rr, 2.0 * M_PI * j / angular))));
            } catch (const hc::NearPole&) {
                sup = std::numeric_limits<double>::infinity();
            }
        }
    }
    return sup;
}

int cmd_shear(double gamma, const std::string& omega_text, int order, const std::string& out_path) {
    const hc::OmegaSpec spec = hc::parse_omega_spec(omega_text);
    const hc::HarmonicMap f = hc::shear_slanted(gamma, spec.map, order);
    hc::write_json_file(out_path, hc::to_json(f));
    std::cout << "shear identity residual: " << hc::shear_identity_residual(f) << "\n";
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_convolve(const std::string& in_path, const std::string& out_path) {
    const hc::HarmonicMap f = hc::harmonic_map_from_json(hc::read_json_file(in_path));
    hc::write_json_file(out_path, hc::to_json(hc::convolve_f0(f)));
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_dilatation(double gamma, const std::string& omega_text, const std::string& out_path) {
    const hc::OmegaSpec spec = hc::parse_omega_spec(omega_text);
    const hc::json j = hc::to_json(hc::convolved_dilatation(gamma, spec.map));
    if (!out_path.empty())
        hc::write_json_file(out_path, j);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_check(double gamma, const std::string& omega_text, int order) {
    const hc::OmegaSpec spec = hc::parse_omega_spec(omega_text);
    hc::json out;

    if (spec.monomial) {
        const hc::MonomialCheck mc = hc::check_monomial_univalence(gamma, spec.monomial->theta, spec.monomial->n);
        hc::json j{{"kind", "monomial"},
                   {"n", spec.monomial->n},
                   {"theta", spec.monomial->theta},
                   {"applicable", mc.applicable},
                   {"all_roots_in_disk", mc.all_roots_in_disk},
                   {"sup_boundary", mc.sup_boundary}};
        j["witness"] = mc.witness ? hc::to_json(*mc.witness) : hc::json(nullptr);
        out["criteria"] = j;
    } else if (spec.moebius_a) {
        const hc::CriterionReport rep = hc::check_moebius_univalence(hc::MoebiusParams(*spec.moebius_a, gamma));
        out["criteria"] = hc::to_json(rep);
    } else {
        out["criteria"] = hc::json(nullptr);
    }

    const hc::HarmonicMap f = hc::shear_slanted(gamma, spec.map, order);
    const hc::RationalMap ot = hc::convolved_dilatation(gamma, spec.map);
    const hc::VerificationReport rep = hc::full_report(f, ot, -gamma);
    out["verification"] = hc::to_json(rep);

    if (!rep.passed) {
        // Point of local-univalence failure, when one exists on the scan grid.
        double best = 0.0;
        hc::Cx best_z{0.0, 0.0};
        for (int i = 1; i <= 200; ++i) {
            const double r = 0.999 * i / 200;
            for (int j = 0; j < 256; ++j) {
                const hc::Cx z = std::polar(r, 2.0 * M_PI * j / 256);
                try {
                    const double m = std::abs(hc::eval(ot, z));
                    if (std::isfinite(m) && m > best) {
                        best = m;
                        best_z = z;
                    }
                } catch (const hc::NearPole&) {
                }
            }
        }
        if (best > 1.0)
            out["witness"] = hc::json{{"z", hc::to_json(best_z)}, {"abs_omega_tilde", best}};
    }

    std::cout << out.dump(2) << "\n";
    return rep.passed ? 0 : kExitFailed;
}

int cmd_plot(const std::string& map_path, const hc::PlotConfig& cfg, const std::string& out_svg, bool also_convolve) {
    const hc::HarmonicMap f = expanded_for_eval(hc::harmonic_map_from_json(hc::read_json_file(map_path)), 4096);
    hc::write_svg(out_svg, f, cfg);
    std::cout << "wrote " << out_svg << "\n";
    if (also_convolve) {
        const std::string conv_path = with_suffix(out_svg, ".conv");
        hc::write_svg(conv_path, hc::convolve_f0(f), cfg);
        std::cout << "wrote " << conv_path << "\n";
    }
    return 0;
}

int cmd_scan(double gamma, int grid_n, double r_eval, const std::string& out_csv) {
    if (grid_n < 10)
        throw hc::Error("scan: grid must be >= 10");
    std::ofstream out(out_csv, std::ios::binary);
    if (!out)
        throw hc::IoError("cannot open for writing: " + out_csv);
    out << "re_a,im_a,gamma,v,cond_10a,cond_11,applicable,sup_omega_tilde\n";
    for (int iy = 0; iy < grid_n; ++iy) {
        const double im = -1.0 + 2.0 * iy / (grid_n - 1);
        for (int ix = 0; ix < grid_n; ++ix) {
            const double re = -1.0 + 2.0 * ix / (grid_n - 1);
            const hc::Cx a{re, im};
            if (std::abs(a) >= 1.0)
                continue;
            const hc::MoebiusParams p(a, gamma);
            const bool c10 = hc::ellipse_bound_holds(p);
            const bool c11 = hc::equality_locus_holds(p);
            const hc::MoebiusDilatation md = hc::convolved_dilatation_moebius(gamma, a);
            const double sup = empirical_sup(md.map, r_eval, 64, 128);
            out << fmt6(re) << ',' << fmt6(im) << ',' << fmt6(gamma) << ',' << fmt6(hc::v_value(p)) << ','
                << (c10 ? 1 : 0) << ',' << (c11 ? 1 : 0) << ',' << (c10 && !c11 ? 1 : 0) << ',' << fmt6(sup)
                << '\n';
        }
    }
    std::cout << "wrote " << out_csv << "\n";
    return 0;
}

int cmd_example(int id, const std::string& outdir) {
    const hc::GalleryCase c = hc::example_case(id);
    const hc::HarmonicMap f = hc::shear_slanted(c.gamma, c.omega, 4096);
    const hc::PlotConfig cfg;
    const std::string stem = outdir + "/figure" + std::to_string(id);
    hc::write_svg(stem + "_f.svg", f, cfg);
    hc::write_svg(stem + "_conv.svg", hc::convolve_f0(f), cfg);
    std::cout << "wrote " << stem << "_f.svg and " << stem << "_conv.svg\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"slanted half-plane harmonic mappings: shear, convolution, univalence criteria, figures"};
    app.require_subcommand(1);

    double gamma = 0.0;
    std::string omega_text = "z";
    std::string in_path, out_path;
    int order = 64;

    auto* shear = app.add_subcommand("shear", "shear a slanted half-plane map and write its JSON");
    shear->add_option("--gamma", gamma, "slant angle in radians")->required();
    shear->add_option("--omega", omega_text, "dilatation, e.g. \"z\", \"-z^2\", \"(z+0.5)/(1+0.5*z)\"")->required();
    shear->add_option("--order", order, "series truncation order");
    shear->add_option("--out", out_path, "output map JSON path")->required();

    auto* convolve = app.add_subcommand("convolve", "convolve a map file with the canonical half-plane map");
    convolve->add_option("--in", in_path, "input map JSON")->required();
    convolve->add_option("--out", out_path, "output map JSON")->required();

    std::string dil_out;
    auto* dil = app.add_subcommand("dilatation", "closed-form dilatation of the convolution");
    dil->add_option("--gamma", gamma, "slant angle in radians")->required();
    dil->add_option("--omega", omega_text, "dilatation of the source map")->required();
    dil->add_option("--out", dil_out, "optional output JSON path");

    int check_order = 256;
    auto* check = app.add_subcommand("check", "decide and verify the univalence criteria");
    check->add_option("--gamma", gamma, "slant angle in radians")->required();
    check->add_option("--omega", omega_text, "dilatation of the source map")->required();
    check->add_option("--order", check_order, "series order for verification");

    hc::PlotConfig cfg;
    bool also_convolve = false;
    auto* plot = app.add_subcommand("plot", "SVG image of rings and rays under the map");
    plot->add_option("--map", in_path, "map JSON path")->required();
    plot->add_option("--out", out_path, "output SVG path")->required();
    plot->add_option("--rings", cfg.rings, "number of concentric circles");
    plot->add_option("--rays", cfg.rays, "number of radial segments");
    plot->add_option("--r-max", cfg.r_max, "outer radius in the source disk");
    plot->add_option("--samples", cfg.samples_per_curve, "samples per curve");
    plot->add_option("--clip", cfg.clip_radius, "clip curves at |w| = W");
    plot->add_option("--width", cfg.width_px, "image width in pixels");
    plot->add_flag("--convolve", also_convolve, "also plot the convolution with the canonical map");

    int grid_n = 200;
    double r_eval = 0.995;
    auto* scan = app.add_subcommand("scan", "CSV sweep of the disk-automorphism criteria over a");
    scan->add_option("--gamma", gamma, "slant angle in radians")->required();
    scan->add_option("--grid", grid_n, "grid points per axis");
    scan->add_option("--r-eval", r_eval, "radius for the empirical sup");
    scan->add_option("--out", out_path, "output CSV path")->required();

    int example_id = 1;
    std::string outdir = ".";
    auto* example = app.add_subcommand("example", "regenerate a worked example's figure pair");
    example->add_option("id", example_id, "example id: 1, 2 or 3")->required();
    example->add_option("--outdir", outdir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (shear->parsed())
            return cmd_shear(gamma, omega_text, order, out_path);
        if (convolve->parsed())
            return cmd_convolve(in_path, out_path);
        if (dil->parsed())
            return cmd_dilatation(gamma, omega_text, dil_out);
        if (check->parsed())
            return cmd_check(gamma, omega_text, check_order);
        if (plot->parsed())
            return cmd_plot(in_path, cfg, out_path, also_convolve);
        if (scan->parsed())
            return cmd_scan(gamma, grid_n, r_eval, out_path);
        if (example->parsed())
            return cmd_example(example_id, outdir);
    } catch (const hc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const hc::DilatationNotSchlicht& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const hc::DegenerateShear& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const hc::DegenerateMoebius& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const hc::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 1;
    } catch (const hc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
