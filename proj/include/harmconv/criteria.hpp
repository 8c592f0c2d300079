#pragma once

#include <optional>

#include "harmconv/dilatation.hpp"

namespace harmconv {

// Moebius dilatation parameters in polar form: a = |a| e^{i theta}, |a| < 1.
// theta is stored redundantly (0 when a = 0) because the scalar criteria are
// stated in (|a|, theta).
struct MoebiusParams {
    Cx a{0.0, 0.0};
    double theta = 0.0;
    double gamma = 0.0;

    MoebiusParams(Cx a_, double gamma_);
    double mod_a() const { return std::abs(a); }
};

struct SpecialCaseFlags {
    bool gamma_thirds = false;     // gamma in {0, 2pi/3, 4pi/3} with the ellipse bound
    bool right_halfplane = false;  // gamma = 0, (Re a)^2 + 9(Im a)^2 <= 1
    bool left_halfplane = false;   // gamma = pi, Im a != 0, 9(Re a)^2 + (Im a)^2 <= 1
};

struct CriterionReport {
    double v = 0.0;
    Cx u{0.0, 0.0};
    std::optional<Cx> z0_closed;
    std::optional<Cx> z0_roots;
    double ab_modulus = 0.0;
    bool cond_10a = false; // ellipse bound |a|^2(cos^2 + 9 sin^2)(theta - gamma/2) <= 1
    bool cond_11 = false;  // equality locus where |AB| = 1
    bool applicable = false;
    SpecialCaseFlags corollaries;
    bool b1_warning = false; // omega(0) != 0 forces a nonzero co-analytic linear coefficient
};

// v(a) = 4|a|^2 cos(2 theta - gamma) + 4|a| cos(theta + gamma)
//        - 8|a| cos(theta - 2 gamma) - 3 - 5|a|^2, always <= 0 on the ellipse.
double v_value(const MoebiusParams& p);
double v_value_squares(const MoebiusParams& p); // completed-squares form, same value

// u(a) = 6a^2 e^{-i gamma} + 8a e^{i gamma} - 4 conj(a) e^{2i gamma} - 3|a|^2 + 2e^{3i gamma} - 1
Cx u_value(const MoebiusParams& p);

bool ellipse_bound_holds(const MoebiusParams& p);  // cond_10a
bool equality_locus_holds(const MoebiusParams& p); // cond_11
double ab_modulus(const MoebiusParams& p);         // |constant term of the monic quadratic|

Cx z0_closed_form(const MoebiusParams& p);  // e^{-i gamma} u/v; BoundaryCase when |v| ~ 0
Cx z0_from_roots(Cx A, Cx B);               // (A(|B|^2-1)+B(|A|^2-1))/(1-|AB|^2)

// | (|u|^2-|v|^2) - 8[|a|cos(theta-gamma/2)+cos(3gamma/2)]^2 ((cos^2+9sin^2)|a|^2 - 1) |
double factorization_residual(const MoebiusParams& p);

// | |A(|B|^2-1)+B(|A|^2-1)|^2 - (1-|AB|^2)^2 + (1-|A|^2)(1-|B|^2)|1-A conj(B)|^2 |
double root_location_identity_residual(Cx A, Cx B);

struct MonomialCheck {
    bool applicable = false;       // n in {1, 2}
    std::optional<Cx> witness;     // Cohn-reduced zero for n = 1
    bool all_roots_in_disk = false;
    double sup_boundary = 0.0;     // sup of |convolved dilatation| on the unit circle
};

MonomialCheck check_monomial_univalence(double gamma, double theta, int n);

CriterionReport check_moebius_univalence(const MoebiusParams& p);

SpecialCaseFlags special_case_flags(const MoebiusParams& p);

struct CounterexampleReport {
    double root_moduli_product = 0.0; // over all roots of the numerator factor, = n/2
    Cx witness{0.0, 0.0};             // interior point with |dilatation| > 1
    double witness_modulus = 0.0;
};

// omega = -z^n with n >= 3: the convolution dilatation exceeds 1 inside the disk.
CounterexampleReport monomial_failure_witness(int n, double gamma);

} // namespace harmconv
