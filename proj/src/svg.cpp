#include "harmconv/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

namespace harmconv {

namespace {

std::string fmt6(double x) {
    char buf[64];
    if (std::abs(x) < 5e-7)
        x = 0.0; // avoid "-0.000000"
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

struct CurveWriter {
    const PlotConfig& cfg;
    std::string& out;

    void emit(const std::vector<Cx>& points, const char* stroke) {
        // Split into sub-polylines at clip crossings; crossing points are pulled
        // back onto the |w| = W circle and such pieces carry data-clipped="1".
        const double W = cfg.clip_radius;
        struct Piece {
            std::vector<Cx> pts;
            bool clipped = false;
        };
        std::vector<Piece> pieces;
        Piece current;
        auto flush = [&]() {
            if (current.pts.size() >= 2)
                pieces.push_back(current);
            current = Piece{};
        };
        for (size_t k = 0; k < points.size(); ++k) {
            const Cx w = points[k];
            if (std::abs(w) <= W) {
                if (current.pts.empty() && k > 0 && std::abs(points[k - 1]) > W) {
                    current.pts.push_back(cross_point(points[k - 1], w, W));
                    current.clipped = true;
                }
                current.pts.push_back(w);
            } else if (!current.pts.empty()) {
                current.pts.push_back(cross_point(current.pts.back(), w, W));
                current.clipped = true;
                flush();
            }
        }
        flush();
        for (const auto& piece : pieces) {
            out += "<polyline fill=\"none\" stroke=\"";
            out += stroke;
            out += "\" stroke-width=\"1\"";
            if (piece.clipped)
                out += " data-clipped=\"1\"";
            out += " points=\"";
            for (size_t k = 0; k < piece.pts.size(); ++k) {
                if (k)
                    out += ' ';
                out += fmt6(px(piece.pts[k].real()));
                out += ',';
                out += fmt6(py(piece.pts[k].imag()));
            }
            out += "\"/>\n";
        }
    }

    static Cx cross_point(Cx a, Cx b, double W) {
        // Linear interpolation in w-space to the clip circle.
        const double fa = std::abs(a), fb = std::abs(b);
        if (fa == fb)
            return a;
        const double t = (W - fa) / (fb - fa);
        const Cx w = a + t * (b - a);
        const double m = std::abs(w);
        return m > 0.0 ? w * (W / m) : w;
    }

    double px(double x) const { return (x + cfg.clip_radius) / (2.0 * cfg.clip_radius) * cfg.width_px; }
    double py(double y) const { return (cfg.clip_radius - y) / (2.0 * cfg.clip_radius) * cfg.width_px; }
};

} // namespace

std::string render_svg(const HarmonicMap& f, const PlotConfig& cfg) {
    if (cfg.rings < 1 || cfg.rays < 1 || !(cfg.r_max > 0.0 && cfg.r_max < 1.0) || cfg.samples_per_curve < 64 ||
        cfg.clip_radius <= 0.0)
        throw Error("render_svg: invalid plot configuration");

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(cfg.width_px) + "\" height=\"" +
           std::to_string(cfg.width_px) + "\" viewBox=\"0 0 " + std::to_string(cfg.width_px) + " " +
           std::to_string(cfg.width_px) + "\">\n";

    CurveWriter writer{cfg, out};
    const int m = cfg.samples_per_curve;

    out += "<g id=\"rings\">\n";
    for (int k = 1; k <= cfg.rings; ++k) {
        const double r = cfg.r_max * k / cfg.rings;
        std::vector<Cx> pts(static_cast<size_t>(m) + 1);
        for (int j = 0; j <= m; ++j)
            pts[static_cast<size_t>(j)] = eval_map(f, std::polar(r, 2.0 * M_PI * j / m)).w;
        writer.emit(pts, "#1f77b4");
    }
    out += "</g>\n";

    out += "<g id=\"rays\">\n";
    for (int j = 0; j < cfg.rays; ++j) {
        const double t = 2.0 * M_PI * j / cfg.rays;
        std::vector<Cx> pts(static_cast<size_t>(m) + 1);
        for (int k = 0; k <= m; ++k)
            pts[static_cast<size_t>(k)] = eval_map(f, std::polar(cfg.r_max * k / m, t)).w;
        writer.emit(pts, "#d62728");
    }
    out += "</g>\n</svg>\n";
    return out;
}

void write_svg(const std::string& path, const HarmonicMap& f, const PlotConfig& cfg) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out << render_svg(f, cfg);
}

} // namespace harmconv
