#include "harmconv/criteria.hpp"

#include <cmath>
#include <limits>

namespace harmconv {

MoebiusParams::MoebiusParams(Cx a_, double gamma_) : a(a_), gamma(gamma_) {
    if (std::abs(a) >= 1.0)
        throw Error("MoebiusParams: |a| < 1 required");
    theta = std::abs(a) == 0.0 ? 0.0 : std::arg(a);
}

double v_value(const MoebiusParams& p) {
    const double m = p.mod_a();
    return 4.0 * m * m * std::cos(2.0 * p.theta - p.gamma) + 4.0 * m * std::cos(p.theta + p.gamma) -
           8.0 * m * std::cos(p.theta - 2.0 * p.gamma) - 3.0 - 5.0 * m * m;
}

double v_value_squares(const MoebiusParams& p) {
    const double m = p.mod_a();
    const double half = p.theta - p.gamma / 2.0;
    const double c = m * std::cos(half) + 2.0 * std::cos(1.5 * p.gamma);
    const double s = 3.0 * m * std::sin(half) + 2.0 * std::sin(1.5 * p.gamma);
    return -c * c - s * s + 1.0;
}

Cx u_value(const MoebiusParams& p) {
    const Cx eg = unit_phase(p.gamma);
    return 6.0 * p.a * p.a * std::conj(eg) + 8.0 * p.a * eg - 4.0 * std::conj(p.a) * eg * eg -
           Cx{3.0 * std::norm(p.a), 0.0} + 2.0 * unit_phase(3.0 * p.gamma) - Cx{1.0, 0.0};
}

bool ellipse_bound_holds(const MoebiusParams& p) {
    const double m = p.mod_a();
    const double half = p.theta - p.gamma / 2.0;
    const double c = std::cos(half), s = std::sin(half);
    return m * m * (c * c + 9.0 * s * s) <= 1.0;
}

bool equality_locus_holds(const MoebiusParams& p) {
    const double m = p.mod_a();
    const double half = p.theta - p.gamma / 2.0;
    return std::abs(m * std::cos(half) + std::cos(1.5 * p.gamma)) < 1e-10 &&
           std::abs(3.0 * m * std::sin(half) + std::sin(1.5 * p.gamma)) < 1e-10;
}

double ab_modulus(const MoebiusParams& p) {
    const Cx e2 = unit_phase(2.0 * p.gamma);
    const Cx d = 2.0 * (Cx{1.0, 0.0} + std::conj(p.a) * e2);
    if (std::abs(d) < 2e-12)
        throw DegenerateMoebius();
    const Cx ab = (2.0 * p.a * p.a + 2.0 * p.a * e2 + unit_phase(p.gamma) * (1.0 - std::norm(p.a))) / d;
    return std::abs(ab);
}

Cx z0_closed_form(const MoebiusParams& p) {
    const double v = v_value(p);
    if (std::abs(v) <= 1e-12)
        throw BoundaryCase("z0: v(a) vanishes on the |AB| = 1 locus");
    return unit_phase(-p.gamma) * u_value(p) / v;
}

Cx z0_from_roots(Cx A, Cx B) {
    // A(|B|^2-1) + B(|A|^2-1) = AB conj(A+B) - (A+B); the symmetric grouping
    // keeps the quotient accurate near double roots, where A and B carry
    // sqrt-of-epsilon errors that cancel in their sum and product.
    const Cx p = A * B;
    const Cx s = A + B;
    const double prod = std::norm(p);
    if (std::abs(1.0 - prod) <= 1e-12)
        throw BoundaryCase("z0: |AB| = 1");
    return (p * std::conj(s) - s) / (1.0 - prod);
}

double factorization_residual(const MoebiusParams& p) {
    const double m = p.mod_a();
    const double half = p.theta - p.gamma / 2.0;
    const double c = std::cos(half), s = std::sin(half);
    const double u2 = std::norm(u_value(p));
    const double v = v_value(p);
    const double lhs = u2 - v * v;
    const double bracket = m * c + std::cos(1.5 * p.gamma);
    const double rhs = 8.0 * bracket * bracket * ((c * c + 9.0 * s * s) * m * m - 1.0);
    return std::abs(lhs - rhs);
}

double root_location_identity_residual(Cx A, Cx B) {
    const double lhs =
        std::norm(A * (std::norm(B) - 1.0) + B * (std::norm(A) - 1.0)) -
        (1.0 - std::norm(A) * std::norm(B)) * (1.0 - std::norm(A) * std::norm(B));
    const double rhs = -(1.0 - std::norm(A)) * (1.0 - std::norm(B)) * std::norm(Cx{1.0, 0.0} - A * std::conj(B));
    return std::abs(lhs - rhs);
}

MonomialCheck check_monomial_univalence(double gamma, double theta, int n) {
    if (n < 1)
        throw Error("check_monomial_univalence: n >= 1 required");
    MonomialCheck out;
    out.applicable = n == 1 || n == 2;
    if (!out.applicable)
        return out;

    if (n == 1)
        out.witness = unit_phase(-gamma) / 3.0 - (2.0 / 3.0) * unit_phase(2.0 * gamma - theta);

    const Polynomial t = monomial_numerator_factor(gamma, theta, n);
    out.all_roots_in_disk = zeros_in_closed_disk(t).all_inside;

    // Boundary poles of these dilatations are always matched by numerator
    // zeros (the denominator is the star of the numerator factor), so a 0/0
    // sample is removable and gets skipped rather than failing the sweep.
    const RationalMap ot = convolved_dilatation_monomial(gamma, theta, n);
    double sup = 0.0;
    for (int k = 0; k < 4096; ++k) {
        try {
            sup = std::max(sup, std::abs(eval(ot, std::polar(1.0, 2.0 * M_PI * k / 4096.0))));
        } catch (const NearPole&) {
        }
    }
    out.sup_boundary = sup;
    return out;
}

SpecialCaseFlags special_case_flags(const MoebiusParams& p) {
    SpecialCaseFlags flags;
    auto near = [](double x, double y) { return std::abs(x - y) < 1e-12; };
    const bool thirds = near(p.gamma, 0.0) || near(p.gamma, 2.0 * M_PI / 3.0) || near(p.gamma, 4.0 * M_PI / 3.0);
    flags.gamma_thirds = thirds && ellipse_bound_holds(p);
    const double re = p.a.real(), im = p.a.imag();
    flags.right_halfplane = near(p.gamma, 0.0) && re * re + 9.0 * im * im <= 1.0;
    flags.left_halfplane = near(p.gamma, M_PI) && im != 0.0 && 9.0 * re * re + im * im <= 1.0;
    return flags;
}

CriterionReport check_moebius_univalence(const MoebiusParams& p) {
    CriterionReport rep;
    rep.v = v_value(p);
    rep.u = u_value(p);
    rep.ab_modulus = ab_modulus(p);
    rep.cond_10a = ellipse_bound_holds(p);
    rep.cond_11 = equality_locus_holds(p);
    rep.applicable = rep.cond_10a && !rep.cond_11;
    rep.corollaries = special_case_flags(p);
    rep.b1_warning = std::abs(p.a) > 0.0;

    const MoebiusDilatation md = convolved_dilatation_moebius(p.gamma, p.a);
    if (std::abs(rep.v) > 1e-12)
        rep.z0_closed = z0_closed_form(p);
    if (std::abs(1.0 - std::norm(md.fact.A) * std::norm(md.fact.B)) > 1e-12)
        rep.z0_roots = z0_from_roots(md.fact.A, md.fact.B);

    if (rep.applicable) {
        const DiskLocation loc = zeros_in_closed_disk(md.fact.t);
        const double min_mod = std::min(std::abs(md.fact.A), std::abs(md.fact.B));
        if (!loc.all_inside || min_mod >= 1.0 + 1e-9)
            throw Error("check_moebius_univalence: root location contradicts the criterion");
    }
    return rep;
}

CounterexampleReport monomial_failure_witness(int n, double gamma) {
    if (n < 3)
        throw Error("monomial_failure_witness: n >= 3 required");
    const Polynomial t = monomial_numerator_factor(gamma, M_PI, n);
    CounterexampleReport out;
    out.root_moduli_product = 1.0;
    for (Cx r : roots_of(t).roots)
        out.root_moduli_product *= std::abs(r);

    const RationalMap ot = convolved_dilatation_monomial(gamma, M_PI, n);
    auto mod_at = [&ot](Cx z) {
        try {
            return std::abs(eval(ot, z));
        } catch (const NearPole&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    // Polar grid scan, then coordinate ascent with a shrinking step.
    const int nr = 400, nt = 400;
    double best = 0.0;
    Cx best_z{0.0, 0.0};
    for (int i = 1; i <= nr; ++i) {
        const double r = 0.999 * i / nr;
        for (int j = 0; j < nt; ++j) {
            const Cx z = std::polar(r, 2.0 * M_PI * j / nt);
            const double m = mod_at(z);
            if (m > best && std::isfinite(m)) {
                best = m;
                best_z = z;
            }
        }
    }
    double step = 0.999 / nr;
    for (int it = 0; it < 20; ++it) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (Cx d : {Cx{step, 0.0}, Cx{-step, 0.0}, Cx{0.0, step}, Cx{0.0, -step}}) {
                const Cx z = best_z + d;
                if (std::abs(z) > 0.999)
                    continue;
                const double m = mod_at(z);
                if (std::isfinite(m) && m > best) {
                    best = m;
                    best_z = z;
                    moved = true;
                }
            }
        }
        step *= 0.5;
    }

    if (best <= 1.0)
        throw WitnessNotFound();
    out.witness = best_z;
    out.witness_modulus = best;
    return out;
}

} // namespace harmconv
