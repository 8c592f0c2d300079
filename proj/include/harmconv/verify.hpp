#pragma once

#include <functional>

#include "harmconv/harmonic_map.hpp"

namespace harmconv {

struct GridSpec {
    int radial = 201;
    int angular = 201;
};

struct VerificationReport {
    double sup_omega_tilde_interior = 0.0;
    double sup_omega_tilde_boundary = 0.0;
    int poles_in_disk = 0;
    double min_jacobian = 0.0;
    double halfplane_residual = 0.0; // min of Re(e^{i gamma} f) + 1/2
    double direction = 0.0;
    int monotone_arc_count = 0;
    bool passed = false;
    double r_max = 0.995;
    GridSpec grid;
    double tol = 1e-9;
};

// Grid and boundary sup of |omega_tilde| plus a pole count (|pole| < 1 - 1e-9).
VerificationReport check_local_univalence(const RationalMap& omega_tilde, double r_max, GridSpec grid);

// Number of maximal monotone arcs of t -> Im(e^{-i direction} w(r e^{it})) over
// one turn of the circle; 2 means the r-subdomain image is convex in the given
// direction. Differences below 1e-9 * (max - min) merge as flat.
int count_monotone_arcs(const std::function<Cx(Cx)>& w, double direction, double r, int samples);
int check_convex_in_direction(const HarmonicMap& f, double direction, double r, int samples);

// Min over the polar grid of Re(e^{i gamma} f(z)) + 1/2.
double check_halfplane_range(const HarmonicMap& f, double gamma, double r, GridSpec grid);

// Runs every sub-check on the source map f and the dilatation of its
// convolution with the canonical map. passed requires: interior sup < 1, no
// poles in the disk, positive Jacobian of the convolution, exactly 2 arcs.
VerificationReport full_report(const HarmonicMap& f, const RationalMap& omega_tilde, double direction);

} // namespace harmconv
