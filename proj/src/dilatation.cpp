#include "harmconv/dilatation.hpp"

#include <cmath>

namespace harmconv {

namespace {

// Clears omega = unit z^m p/q out of the displayed formula. With P = unit z^m p
// and Q = q the two polynomial halves are
//   num = P^2 + u2 (PQ - z D/2) + u1 D/2,      u2 = e^{2i gamma}, u1 = e^{i gamma}
//   den = Q^2 + conj(u2) (PQ - z D/2) + conj(u1) z^2 D/2,   D = P'Q - PQ'
RationalMap assemble(Cx u1, Cx u2, Cx front_unit, const RationalMap& omega) {
    if (omega.num.is_zero())
        return RationalMap::zero();

    const Polynomial P = shift_up(scale(omega.num, omega.unit), omega.power);
    const Polynomial& Q = omega.den;
    const Polynomial D = add(mul(derivative(P), Q), scale(mul(P, derivative(Q)), Cx{-1.0, 0.0}));
    const Polynomial PQ = mul(P, Q);
    const Polynomial zD_half = shift_up(scale(D, Cx{0.5, 0.0}), 1);
    const Polynomial bracket = add(PQ, scale(zD_half, Cx{-1.0, 0.0}));

    const Polynomial num =
        add(add(mul(P, P), scale(bracket, u2)), scale(D, 0.5 * u1));
    const Polynomial den =
        add(add(mul(Q, Q), scale(bracket, std::conj(u2))), shift_up(scale(D, 0.5 * std::conj(u1)), 2));

    if (den.is_zero())
        throw DegenerateDenominator();

    RationalMap out;
    out.num = num;
    out.den = den;
    out.power = 1;
    out.unit = front_unit;
    return simplified(std::move(out));
}

} // namespace

RationalMap convolved_dilatation(double gamma, const RationalMap& omega) {
    const Cx u1 = unit_phase(gamma);
    const Cx u2 = unit_phase(2.0 * gamma);
    return assemble(u1, u2, -unit_phase(-gamma), omega);
}

RationalMap convolved_dilatation_left_halfplane(const RationalMap& omega) {
    return assemble(Cx{-1.0, 0.0}, Cx{1.0, 0.0}, Cx{1.0, 0.0}, omega);
}

Polynomial monomial_numerator_factor(double gamma, double theta, int n) {
    if (n < 1)
        throw Error("monomial_numerator_factor: n >= 1 required");
    std::vector<Cx> c(static_cast<size_t>(n) + 2, Cx{0.0, 0.0});
    c[0] = (n / 2.0) * unit_phase(gamma - theta);
    c[1] += (1.0 - n / 2.0) * unit_phase(2.0 * gamma - theta);
    c[static_cast<size_t>(n) + 1] += Cx{1.0, 0.0};
    return Polynomial(std::move(c));
}

RationalMap convolved_dilatation_monomial(double gamma, double theta, int n) {
    if (n < 1)
        throw Error("convolved_dilatation_monomial: n >= 1 required");
    const Polynomial t = monomial_numerator_factor(gamma, theta, n);
    RationalMap out;
    out.num = t;
    out.den = star(t);
    out.power = n;
    out.unit = -unit_phase(2.0 * theta - gamma);
    return simplified(std::move(out));
}

Polynomial moebius_quadratic(double gamma, Cx a) {
    const Cx e1 = unit_phase(gamma);
    const Cx e2 = unit_phase(2.0 * gamma);
    const Cx d = 2.0 * (Cx{1.0, 0.0} + std::conj(a) * e2);
    if (std::abs(d) < 2e-12)
        throw DegenerateMoebius();
    const double aa = std::norm(a);
    const Cx c1 = (4.0 * a + e2 * (1.0 + 3.0 * aa)) / d;
    const Cx c0 = (2.0 * a * a + 2.0 * a * e2 + e1 * (1.0 - aa)) / d;
    return Polynomial(std::vector<Cx>{c0, c1, Cx{1.0, 0.0}});
}

MoebiusDilatation convolved_dilatation_moebius(double gamma, Cx a) {
    if (std::abs(a) >= 1.0)
        throw Error("convolved_dilatation_moebius: |a| < 1 required");
    const Polynomial t = moebius_quadratic(gamma, a);
    const Cx e2 = unit_phase(2.0 * gamma);
    const Cx ratio = (Cx{1.0, 0.0} + std::conj(a) * e2) / (Cx{1.0, 0.0} + a * std::conj(e2));

    MoebiusFactorization fact;
    fact.phi = std::arg(ratio);
    fact.t = t;

    RootSet rs = roots_of(t);
    Cx A = -rs.roots[0];
    Cx B = -rs.roots[1];
    if (B.real() < A.real() || (B.real() == A.real() && B.imag() < A.imag()))
        std::swap(A, B);
    fact.A = A;
    fact.B = B;

    RationalMap map;
    map.num = t;
    map.den = star(t);
    map.power = 1;
    map.unit = -unit_phase(-(gamma - fact.phi));
    return MoebiusDilatation{normalized(std::move(map)), fact};
}

} // namespace harmconv
