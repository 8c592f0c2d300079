#pragma once

#include <optional>

#include "harmconv/power_series.hpp"
#include "harmconv/rational_map.hpp"

namespace harmconv {

// Planar harmonic map f = h + conj(g), h and g analytic, stored as truncated
// series of equal order. gamma is the slant of the target half-plane; omega is
// the exact dilatation g'/h' when one is known.
struct HarmonicMap {
    PowerSeries h;
    PowerSeries g;
    double gamma = 0.0;
    std::optional<RationalMap> omega;

    int order() const { return h.order(); }
};

struct PointImage {
    Cx w;
    Cx z;
};

// Canonical right half-plane map with dilatation -z: h coefficients (n+1)/2,
// g coefficients -(n-1)/2 for n >= 1.
HarmonicMap make_f0(int order);

// Shear construction for the slanted half-plane target: recovers (h, g) from
// h + e^{-2i gamma} g = z/(1 - e^{i gamma} z) and g' = omega h'.
// Throws DilatationNotSchlicht when |omega| reaches 1 inside the disk and
// DegenerateShear when 1 + e^{-2i gamma} omega(0) vanishes.
HarmonicMap shear_slanted(double gamma, const RationalMap& omega, int order);

// Coefficientwise Hadamard convolution of the analytic and co-analytic parts.
HarmonicMap convolve(const HarmonicMap& f, const HarmonicMap& F);

// Convolution with the canonical map: (h + z h')/2 and (g - z g')/2, done
// coefficientwise so it matches convolve(make_f0(N), f) exactly.
HarmonicMap convolve_f0(const HarmonicMap& f);

PointImage eval_map(const HarmonicMap& f, Cx z); // throws OutsideDomain for |z| >= 1
double jacobian_at(const HarmonicMap& f, Cx z);  // |h'(z)|^2 - |g'(z)|^2

// Max over n <= order of |h_n + e^{-2i gamma} g_n - e^{i(n-1) gamma}|.
double shear_identity_residual(const HarmonicMap& f);

} // namespace harmconv
