#include "harmconv/rational_map.hpp"

#include <algorithm>
#include <cmath>

namespace harmconv {

RationalMap RationalMap::zero() {
    RationalMap r;
    r.num = Polynomial(std::vector<Cx>{Cx{0.0, 0.0}});
    return r;
}

RationalMap RationalMap::monomial(Cx c, int n) {
    RationalMap r;
    const double m = std::abs(c);
    if (m < 1e-300)
        return zero();
    r.unit = c / m;
    r.num = Polynomial(std::vector<Cx>{Cx{m, 0.0}});
    r.power = n;
    return r;
}

RationalMap RationalMap::moebius(Cx a) {
    RationalMap r;
    r.num = Polynomial(std::vector<Cx>{a, Cx{1.0, 0.0}});
    r.den = Polynomial(std::vector<Cx>{Cx{1.0, 0.0}, std::conj(a)});
    return r;
}

Cx eval(const RationalMap& r, Cx z) {
    const Cx d = eval(r.den, z);
    if (std::abs(d) <= 1e-13)
        throw NearPole();
    Cx zp{1.0, 0.0};
    for (int k = 0; k < r.power; ++k)
        zp *= z;
    return r.unit * zp * eval(r.num, z) / d;
}

RationalMap normalized(RationalMap r) {
    const Cx d0 = r.den.coeff(0);
    if (std::abs(d0) > 1e-12) {
        const Cx s = 1.0 / d0;
        r.den = scale(r.den, s);
        r.num = scale(r.num, s);
    }
    const double um = std::abs(r.unit);
    if (um > 1e-300 && std::abs(um - 1.0) > 1e-15) {
        r.num = scale(r.num, um);
        r.unit /= um;
    }
    return r;
}

RationalMap simplified(RationalMap r, double pair_tol) {
    r.num = r.num.stripped();
    r.den = r.den.stripped();
    if (r.num.is_zero())
        return RationalMap::zero();

    // z^k factors of the numerator move into the prefactor power.
    double num_scale = 0.0;
    for (Cx c : r.num.coeffs())
        num_scale = std::max(num_scale, std::abs(c));
    while (r.num.degree() >= 1 && std::abs(r.num.coeff(0)) < 1e-12 * num_scale) {
        r.num = deflate(r.num, Cx{0.0, 0.0});
        ++r.power;
    }

    if (r.num.degree() >= 1 && r.den.degree() >= 1) {
        const RootSet rn = roots_of(r.num);
        const RootSet rd = roots_of(r.den);
        std::vector<bool> used(rd.roots.size(), false);
        std::vector<Cx> keep_num;
        Polynomial den = r.den;
        Polynomial num = r.num;
        for (Cx root : rn.roots) {
            int match = -1;
            double best = pair_tol;
            for (size_t j = 0; j < rd.roots.size(); ++j) {
                if (used[j])
                    continue;
                const double dist = std::abs(root - rd.roots[j]);
                if (dist < best) {
                    best = dist;
                    match = static_cast<int>(j);
                }
            }
            if (match >= 0) {
                used[static_cast<size_t>(match)] = true;
                num = deflate(num, root);
                den = deflate(den, rd.roots[static_cast<size_t>(match)]);
            }
        }
        r.num = num;
        r.den = den;
    }
    return normalized(std::move(r));
}

std::vector<Cx> poles(const RationalMap& r) {
    if (r.den.degree() < 1)
        return {};
    return roots_of(r.den).roots;
}

double sup_modulus_on_circle(const RationalMap& r, double radius, int samples) {
    if (samples < 256)
        throw Error("sup_modulus_on_circle: samples >= 256 required");
    for (Cx p : poles(r))
        if (std::abs(std::abs(p) - radius) < 1e-6)
            throw NearPole("sup_modulus_on_circle: pole near the sample circle");
    double sup = 0.0;
    for (int k = 0; k < samples; ++k) {
        const Cx z = std::polar(radius, 2.0 * M_PI * k / samples);
        sup = std::max(sup, std::abs(eval(r, z)));
    }
    return sup;
}

PowerSeries to_series(const RationalMap& r, int order) {
    PowerSeries num_s(std::vector<Cx>(r.num.coeffs()));
    const PowerSeries den_s(std::vector<Cx>(r.den.coeffs()));
    PowerSeries s = mul(num_s.truncated(order), reciprocal(den_s.truncated(order)));
    std::vector<Cx> shifted(static_cast<size_t>(order) + 1, Cx{0.0, 0.0});
    for (int n = r.power; n <= order; ++n)
        shifted[static_cast<size_t>(n)] = r.unit * s.coeff(n - r.power);
    return PowerSeries(std::move(shifted));
}

RationalMap conj_map(const RationalMap& r) {
    auto conj_poly = [](const Polynomial& p) {
        std::vector<Cx> c(p.coeffs());
        for (Cx& x : c)
            x = std::conj(x);
        return Polynomial(std::move(c));
    };
    RationalMap out = r;
    out.num = conj_poly(r.num);
    out.den = conj_poly(r.den);
    out.unit = std::conj(r.unit);
    return out;
}

} // namespace harmconv
