#include "harmconv/verify.hpp"

#include <cmath>
#include <limits>

namespace harmconv {

VerificationReport check_local_univalence(const RationalMap& omega_tilde, double r_max, GridSpec grid) {
    if (!(r_max > 0.0 && r_max < 1.0))
        throw Error("check_local_univalence: 0 < r_max < 1 required");
    VerificationReport rep;
    rep.r_max = r_max;
    rep.grid = grid;

    for (Cx p : poles(omega_tilde))
        if (std::abs(p) < 1.0 - 1e-9)
            ++rep.poles_in_disk;

    auto mod_at = [&omega_tilde](Cx z) {
        try {
            return std::abs(eval(omega_tilde, z));
        } catch (const NearPole&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    double sup = 0.0;
    for (int i = 1; i <= grid.radial; ++i) {
        const double r = r_max * i / grid.radial;
        for (int j = 0; j < grid.angular; ++j)
            sup = std::max(sup, mod_at(std::polar(r, 2.0 * M_PI * j / grid.angular)));
    }
    rep.sup_omega_tilde_interior = sup;

    double bsup = 0.0;
    for (int k = 0; k < 4096; ++k)
        bsup = std::max(bsup, mod_at(std::polar(1.0, 2.0 * M_PI * k / 4096)));
    rep.sup_omega_tilde_boundary = bsup;
    return rep;
}

int count_monotone_arcs(const std::function<Cx(Cx)>& w, double direction, double r, int samples) {
    if (!(r > 0.0 && r < 1.0) || samples < 1024)
        throw Error("count_monotone_arcs: 0 < r < 1 and samples >= 1024 required");
    const Cx rot = unit_phase(-direction);
    std::vector<double> s(static_cast<size_t>(samples));
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int k = 0; k < samples; ++k) {
        s[static_cast<size_t>(k)] = (rot * w(std::polar(r, 2.0 * M_PI * k / samples))).imag();
        lo = std::min(lo, s[static_cast<size_t>(k)]);
        hi = std::max(hi, s[static_cast<size_t>(k)]);
    }

    double variation = 0.0;
    for (int k = 0; k < samples; ++k)
        variation += std::abs(s[static_cast<size_t>((k + 1) % samples)] - s[static_cast<size_t>(k)]);
    if (variation < 1e-9)
        throw DegenerateCurve();

    const double flat = 1e-9 * (hi - lo);
    std::vector<int> signs;
    for (int k = 0; k < samples; ++k) {
        const double d = s[static_cast<size_t>((k + 1) % samples)] - s[static_cast<size_t>(k)];
        if (std::abs(d) < flat)
            continue; // merged into the neighboring run
        const int sgn = d > 0.0 ? 1 : -1;
        if (signs.empty() || signs.back() != sgn)
            signs.push_back(sgn);
    }
    if (signs.empty())
        throw DegenerateCurve();
    int arcs = static_cast<int>(signs.size());
    if (arcs > 1 && signs.front() == signs.back())
        --arcs; // circular wrap joins the first and last runs
    return arcs;
}

int check_convex_in_direction(const HarmonicMap& f, double direction, double r, int samples) {
    return count_monotone_arcs([&f](Cx z) { return eval_map(f, z).w; }, direction, r, samples);
}

double check_halfplane_range(const HarmonicMap& f, double gamma, double r, GridSpec grid) {
    if (!(r > 0.0 && r < 1.0))
        throw Error("check_halfplane_range: 0 < r < 1 required");
    const Cx rot = unit_phase(gamma);
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= grid.radial; ++i) {
        const double rr = r * i / grid.radial;
        for (int j = 0; j < grid.angular; ++j) {
            const Cx w = eval_map(f, std::polar(rr, 2.0 * M_PI * j / grid.angular)).w;
            worst = std::min(worst, (rot * w).real() + 0.5);
        }
    }
    return worst;
}

VerificationReport full_report(const HarmonicMap& f, const RationalMap& omega_tilde, double direction) {
    VerificationReport rep = check_local_univalence(omega_tilde, 0.995, GridSpec{201, 201});
    rep.direction = direction;

    // Coefficients of the convolution derivatives grow like n^3, so evaluation
    // at r = 0.995 needs n^3 r^n to decay below the Jacobian margin. Re-expand
    // when the exact dilatation is on hand.
    HarmonicMap source = f;
    if (f.omega && f.order() < 8192)
        source = shear_slanted(f.gamma, *f.omega, 8192);

    const HarmonicMap conv = convolve_f0(source);
    const PowerSeries hp = derivative(conv.h);
    const PowerSeries gp = derivative(conv.g);
    double minj = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= rep.grid.radial; ++i) {
        const double r = rep.r_max * i / rep.grid.radial;
        for (int j = 0; j < rep.grid.angular; ++j) {
            const Cx z = std::polar(r, 2.0 * M_PI * j / rep.grid.angular);
            minj = std::min(minj, std::norm(eval(hp, z)) - std::norm(eval(gp, z)));
        }
    }
    rep.min_jacobian = minj;

    rep.halfplane_residual = check_halfplane_range(source, source.gamma, 0.995, GridSpec{101, 101});
    rep.monotone_arc_count = check_convex_in_direction(conv, direction, 0.99, 4096);
    rep.passed = rep.sup_omega_tilde_interior < 1.0 && rep.poles_in_disk == 0 && rep.min_jacobian > 0.0 &&
                 rep.monotone_arc_count == 2;
    return rep;
}

} // namespace harmconv
