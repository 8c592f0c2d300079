#include "harmconv/gallery.hpp"

#include <cmath>

#include "harmconv/dilatation.hpp"

namespace harmconv {

namespace {

const Cx I{0.0, 1.0};

RationalMap ratio(std::vector<Cx> num, std::vector<Cx> den, int power, Cx unit) {
    RationalMap r;
    r.num = Polynomial(std::move(num));
    r.den = Polynomial(std::move(den));
    r.power = power;
    r.unit = unit;
    return r;
}

} // namespace

GalleryCase example_case(int id) {
    GalleryCase c;
    c.id = id;
    switch (id) {
    case 1: {
        c.gamma = M_PI / 2.0;
        c.omega = RationalMap::monomial(Cx{1.0, 0.0}, 1);
        auto lg = [](Cx z) { return std::log((1.0 - I * z) / (1.0 - z)); };
        c.closed_h = [lg](Cx z) { return 0.5 * I * lg(z) + 0.5 * (1.0 - I) * z / (1.0 - I * z); };
        c.closed_g = [lg](Cx z) { return 0.5 * I * lg(z) - 0.5 * (1.0 + I) * z / (1.0 - I * z); };
        c.closed_conv_h = [lg](Cx z) {
            return 0.25 * I * lg(z) + 0.25 * (1.0 - I) * z / (1.0 - I * z) +
                   z / (2.0 * (1.0 - z) * (1.0 - I * z) * (1.0 - I * z));
        };
        c.closed_conv_g = [lg](Cx z) {
            return 0.25 * I * lg(z) - 0.25 * (1.0 + I) * z / (1.0 - I * z) -
                   z * z / (2.0 * (1.0 - z) * (1.0 - I * z) * (1.0 - I * z));
        };
        c.expected_tilde_omega =
            ratio({0.5 * I, Cx{-0.5, 0.0}, Cx{1.0, 0.0}}, {Cx{1.0, 0.0}, Cx{-0.5, 0.0}, -0.5 * I}, 1, I);
        break;
    }
    case 2: {
        c.gamma = M_PI;
        c.omega = RationalMap::monomial(Cx{1.0, 0.0}, 1);
        c.closed_h = [](Cx z) { return (z * z + 2.0 * z) / (2.0 * (1.0 + z) * (1.0 + z)); };
        c.closed_g = [](Cx z) { return z * z / (2.0 * (1.0 + z) * (1.0 + z)); };
        c.closed_conv_h = [](Cx z) {
            const Cx w = 1.0 + z;
            return z * (z * z + 3.0 * z + 4.0) / (4.0 * w * w * w);
        };
        c.closed_conv_g = [](Cx z) {
            const Cx w = 1.0 + z;
            return -z * z * (1.0 - z) / (4.0 * w * w * w);
        };
        c.expected_tilde_omega = ratio({Cx{-0.5, 0.0}, Cx{0.5, 0.0}, Cx{1.0, 0.0}},
                                       {Cx{1.0, 0.0}, Cx{0.5, 0.0}, Cx{-0.5, 0.0}}, 1, Cx{1.0, 0.0});
        break;
    }
    case 3: {
        c.gamma = M_PI;
        c.omega = RationalMap::monomial(Cx{-1.0, 0.0}, 2);
        auto lg = [](Cx z) { return std::log((1.0 + z) / (1.0 - z)); };
        c.closed_h = [lg](Cx z) {
            const Cx w = 1.0 + z;
            return lg(z) / 8.0 + 0.25 * (z / w - 1.0 / (w * w) + 1.0);
        };
        c.closed_g = [lg](Cx z) {
            const Cx w = 1.0 + z;
            return -lg(z) / 8.0 + 0.25 * (3.0 * z / w + 1.0 / (w * w) - 1.0);
        };
        c.closed_conv_h = [lg](Cx z) {
            const Cx w = 1.0 + z;
            return lg(z) / 16.0 + 0.125 * (z / w - 1.0 / (w * w) + 1.0) + z / (2.0 * (1.0 - z) * w * w * w);
        };
        c.closed_conv_g = [lg](Cx z) {
            const Cx w = 1.0 + z;
            return -lg(z) / 16.0 + 0.125 * (3.0 * z / w + 1.0 / (w * w) - 1.0) +
                   z * z * z / (2.0 * (1.0 - z) * w * w * w);
        };
        c.expected_tilde_omega = ratio({Cx{1.0, 0.0}}, {Cx{1.0, 0.0}}, 2, Cx{1.0, 0.0});
        break;
    }
    default:
        throw UnknownCase("example_case: id must be 1, 2 or 3");
    }
    return c;
}

double cross_check_case(const GalleryCase& c, int order) {
    if (order < 64)
        throw Error("cross_check_case: order >= 64 required");
    const HarmonicMap f = shear_slanted(c.gamma, c.omega, order);
    const HarmonicMap conv = convolve_f0(f);
    const RationalMap ot = convolved_dilatation(c.gamma, c.omega);

    double worst = 0.0;
    // Deterministic spiral of 128 points with |z| <= 0.8.
    for (int k = 0; k < 128; ++k) {
        const double r = 0.8 * (k + 1) / 128.0;
        const Cx z = std::polar(r, 2.0 * M_PI * (k * 0.618033988749895));
        worst = std::max(worst, std::abs(eval(f.h, z) - c.closed_h(z)));
        worst = std::max(worst, std::abs(eval(f.g, z) - c.closed_g(z)));
        worst = std::max(worst, std::abs(eval(conv.h, z) - c.closed_conv_h(z)));
        worst = std::max(worst, std::abs(eval(conv.g, z) - c.closed_conv_g(z)));
        worst = std::max(worst, std::abs(eval(ot, z) - eval(c.expected_tilde_omega, z)));
    }
    return worst;
}

Cx example3_boundary(double theta) {
    const double t = std::fmod(theta, 2.0 * M_PI);
    if (std::abs(t) < 1e-12 || std::abs(t - M_PI) < 1e-12 || std::abs(t - 2.0 * M_PI) < 1e-12)
        throw OnSlitPoint();
    const double offset = t < M_PI ? M_PI / 16.0 : -M_PI / 16.0;
    return Cx{0.5, offset + 0.25 * std::tan(t / 2.0)};
}

} // namespace harmconv
