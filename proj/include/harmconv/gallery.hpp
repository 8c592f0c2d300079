#pragma once

#include <functional>

#include "harmconv/harmonic_map.hpp"

namespace harmconv {

// Closed-form evaluators for the three worked example maps, used as
// independent oracles against the series pipeline.
struct GalleryCase {
    int id = 0;
    double gamma = 0.0;
    RationalMap omega;
    std::function<Cx(Cx)> closed_h;
    std::function<Cx(Cx)> closed_g;
    std::function<Cx(Cx)> closed_conv_h; // analytic part of the convolution with f0
    std::function<Cx(Cx)> closed_conv_g;
    RationalMap expected_tilde_omega;

    Cx f(Cx z) const { return closed_h(z) + std::conj(closed_g(z)); }
    Cx conv_f(Cx z) const { return closed_conv_h(z) + std::conj(closed_conv_g(z)); }
};

// id 1: gamma = pi/2, omega = z;  id 2: gamma = pi, omega = z;
// id 3: gamma = pi, omega = -z^2. Throws UnknownCase otherwise.
GalleryCase example_case(int id);

// Rebuilds the case through shear + convolution + the dilatation formula and
// returns the max residual against the closed forms over 128 points, |z| <= 0.8.
double cross_check_case(const GalleryCase& c, int order);

// Boundary value of the third example map as stated (imaginary placement):
// 1/2 + i(pi/16 + tan(theta/2)/4) on (0, pi), the -pi/16 branch on (pi, 2pi).
// Throws OnSlitPoint at theta in {0, pi}.
Cx example3_boundary(double theta);

} // namespace harmconv
