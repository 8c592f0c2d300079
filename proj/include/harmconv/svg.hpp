#pragma once

#include <string>

#include "harmconv/harmonic_map.hpp"

namespace harmconv {

// Image of concentric circles and radial segments under a harmonic map,
// rendered deterministically (fixed 6-decimal coordinates, no timestamps).
struct PlotConfig {
    int rings = 10;
    int rays = 16;
    double r_max = 0.99;
    int samples_per_curve = 1000;
    double clip_radius = 8.0; // curves are cut where |w| exceeds this
    int width_px = 800;
};

std::string render_svg(const HarmonicMap& f, const PlotConfig& cfg);
void write_svg(const std::string& path, const HarmonicMap& f, const PlotConfig& cfg);

} // namespace harmconv
