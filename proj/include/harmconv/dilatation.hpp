#pragma once

#include "harmconv/rational_map.hpp"

namespace harmconv {

// Factored form of the convolution dilatation for a Moebius dilatation
// (z+a)/(1 + conj(a) z): -z e^{-i(gamma-phi)} (z+A)(z+B)/((1+conj(A)z)(1+conj(B)z)).
struct MoebiusFactorization {
    double phi = 0.0;
    Cx A{0.0, 0.0};
    Cx B{0.0, 0.0};
    Polynomial t; // monic quadratic with roots -A, -B
};

// Dilatation of the convolution of the canonical right half-plane map with a
// slanted half-plane map of dilatation omega:
//   -z e^{-i gamma} (omega^2 + e^{2i gamma}[omega - z omega'/2] + e^{i gamma} omega'/2)
//              / (1 + e^{-2i gamma}[omega - z omega'/2] + e^{-i gamma} z^2 omega'/2)
// assembled over polynomial coefficients, common factors divided out.
RationalMap convolved_dilatation(double gamma, const RationalMap& omega);

// gamma = pi specialization, assembled with exact +/-1 phase constants.
RationalMap convolved_dilatation_left_halfplane(const RationalMap& omega);

// omega = e^{i theta} z^n:
//   -z^n e^{(2 theta - gamma)i} (z^{n+1} + e^{(2 gamma - theta)i}(1-n/2) z + (n/2) e^{(gamma-theta)i})
//                          / (1 + e^{(theta - 2 gamma)i}(1-n/2) z^n + (n/2) e^{(theta-gamma)i} z^{n+1})
RationalMap convolved_dilatation_monomial(double gamma, double theta, int n);

// The uncancelled monic numerator factor of the monomial case (degree n+1).
Polynomial monomial_numerator_factor(double gamma, double theta, int n);

struct MoebiusDilatation {
    RationalMap map;
    MoebiusFactorization fact;
};

// omega = (z+a)/(1 + conj(a) z), |a| < 1. Throws DegenerateMoebius when
// 1 + conj(a) e^{2i gamma} is too small to normalize the quadratic.
MoebiusDilatation convolved_dilatation_moebius(double gamma, Cx a);

// Monic quadratic t(z) whose negated roots are A and B.
Polynomial moebius_quadratic(double gamma, Cx a);

} // namespace harmconv
