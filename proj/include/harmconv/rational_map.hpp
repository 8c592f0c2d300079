#pragma once

#include "harmconv/polynomial.hpp"

namespace harmconv {

// unit * z^power * num(z)/den(z) with |unit| = 1 and den(0) normalized to 1
// whenever den(0) != 0. The explicit z^power factor keeps dilatations of
// convolutions in the shape the disk-root tests expect.
struct RationalMap {
    Polynomial num{std::vector<Cx>{Cx{1.0, 0.0}}};
    Polynomial den{std::vector<Cx>{Cx{1.0, 0.0}}};
    int power = 0;
    Cx unit{1.0, 0.0};

    static RationalMap zero();
    static RationalMap monomial(Cx c, int n); // c z^n
    static RationalMap moebius(Cx a);         // (z+a)/(1 + conj(a) z)
};

Cx eval(const RationalMap& r, Cx z); // throws NearPole if |den(z)| <= 1e-13

// Scale num/den so den(0) = 1; push any non-unimodular residue of unit into num.
RationalMap normalized(RationalMap r);

// Divide out num/den root pairs closer than pair_tol, move num roots at the
// origin into the z^power prefactor, then normalize.
RationalMap simplified(RationalMap r, double pair_tol = 1e-8);

// Poles = roots of den (den(0)=0 adds a pole at the origin only if power does
// not absorb it; our normalized maps never have that shape).
std::vector<Cx> poles(const RationalMap& r);

// Max of |r| over `samples` uniformly spaced points on the circle of the given
// radius. Throws NearPole when a pole lies within 1e-6 of the circle.
double sup_modulus_on_circle(const RationalMap& r, double radius, int samples);

// Taylor expansion to the given order (den(0) must be away from zero).
PowerSeries to_series(const RationalMap& r, int order);

RationalMap conj_map(const RationalMap& r); // coefficients conjugated: conj(r(conj z))

} // namespace harmconv
