#include "harmconv/harmonic_map.hpp"

#include <cmath>

namespace harmconv {

HarmonicMap make_f0(int order) {
    if (order < 2)
        throw Error("make_f0: order >= 2 required");
    std::vector<Cx> hc(static_cast<size_t>(order) + 1, Cx{0.0, 0.0});
    std::vector<Cx> gc(static_cast<size_t>(order) + 1, Cx{0.0, 0.0});
    for (int n = 1; n <= order; ++n) {
        hc[static_cast<size_t>(n)] = Cx{(n + 1.0) / 2.0, 0.0};
        gc[static_cast<size_t>(n)] = Cx{(1.0 - n) / 2.0, 0.0};
    }
    HarmonicMap f{PowerSeries(std::move(hc)), PowerSeries(std::move(gc)), 0.0,
                  RationalMap::monomial(Cx{-1.0, 0.0}, 1)};
    return f;
}

HarmonicMap shear_slanted(double gamma, const RationalMap& omega, int order) {
    if (order < 2)
        throw Error("shear_slanted: order >= 2 required");

    // Valid dilatation: no pole in the closed disk, |omega| < 1 up to the rim.
    for (Cx p : poles(omega))
        if (std::abs(p) <= 1.0 + 1e-9)
            throw DilatationNotSchlicht("shear_slanted: dilatation has a pole in the closed disk");
    if (!omega.num.is_zero() && sup_modulus_on_circle(omega, 1.0 - 1e-6, 1024) >= 1.0)
        throw DilatationNotSchlicht("shear_slanted: |omega| reaches 1 inside the disk");

    const Cx e2 = unit_phase(-2.0 * gamma);
    const PowerSeries omega_s = to_series(omega, order - 1);
    if (std::abs(Cx{1.0, 0.0} + e2 * omega_s.coeff(0)) <= 1e-12)
        throw DegenerateShear();

    // h' = 1/((1 + e^{-2i gamma} omega)(1 - e^{i gamma} z)^2), then integrate.
    PowerSeries one(std::vector<Cx>{Cx{1.0, 0.0}});
    const Cx eg = unit_phase(gamma);
    PowerSeries square(std::vector<Cx>{Cx{1.0, 0.0}, -2.0 * eg, eg * eg});
    PowerSeries denom = mul(add(one.truncated(order - 1), scale(omega_s, e2)), square.truncated(order - 1));
    PowerSeries h_prime = reciprocal(denom);
    PowerSeries g_prime = mul(omega_s, h_prime);

    HarmonicMap f{integrate(h_prime), integrate(g_prime), gamma, simplified(omega)};
    return f;
}

HarmonicMap convolve(const HarmonicMap& f, const HarmonicMap& F) {
    double gamma = std::fmod(f.gamma + F.gamma, 2.0 * M_PI);
    if (gamma < 0.0)
        gamma += 2.0 * M_PI;
    return HarmonicMap{hadamard(f.h, F.h), hadamard(f.g, F.g), gamma, std::nullopt};
}

HarmonicMap convolve_f0(const HarmonicMap& f) {
    const int order = f.order();
    std::vector<Cx> hc(static_cast<size_t>(order) + 1, Cx{0.0, 0.0});
    std::vector<Cx> gc(static_cast<size_t>(std::min(f.g.order(), order)) + 1, Cx{0.0, 0.0});
    for (int n = 1; n <= order; ++n)
        hc[static_cast<size_t>(n)] = Cx{(n + 1.0) / 2.0, 0.0} * f.h.coeff(n);
    for (int n = 1; n < static_cast<int>(gc.size()); ++n)
        gc[static_cast<size_t>(n)] = Cx{(1.0 - n) / 2.0, 0.0} * f.g.coeff(n);
    return HarmonicMap{PowerSeries(std::move(hc)), PowerSeries(std::move(gc)), f.gamma, std::nullopt};
}

PointImage eval_map(const HarmonicMap& f, Cx z) {
    if (std::abs(z) >= 1.0)
        throw OutsideDomain();
    return PointImage{eval(f.h, z) + std::conj(eval(f.g, z)), z};
}

double jacobian_at(const HarmonicMap& f, Cx z) {
    if (std::abs(z) >= 1.0)
        throw OutsideDomain();
    const Cx hp = eval(derivative(f.h), z);
    const Cx gp = eval(derivative(f.g), z);
    return std::norm(hp) - std::norm(gp);
}

double shear_identity_residual(const HarmonicMap& f) {
    const Cx e2 = unit_phase(-2.0 * f.gamma);
    const PowerSeries target = PowerSeries::geometric(f.gamma, f.order());
    double worst = 0.0;
    for (int n = 0; n <= f.order(); ++n)
        worst = std::max(worst, std::abs(f.h.coeff(n) + e2 * f.g.coeff(n) - target.coeff(n)));
    return worst;
}

} // namespace harmconv
