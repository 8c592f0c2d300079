#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "harmconv/criteria.hpp"

using namespace harmconv;

namespace {

MoebiusParams equality_locus_point(double gamma) {
    // |a| cos(theta - gamma/2) = -cos(3 gamma/2), 3|a| sin(theta - gamma/2) = -sin(3 gamma/2)
    const double x = -std::cos(1.5 * gamma);
    const double y = -std::sin(1.5 * gamma) / 3.0;
    const double mod = std::hypot(x, y);
    const double theta = gamma / 2.0 + std::atan2(y, x);
    return MoebiusParams(std::polar(mod, theta), gamma);
}

} // namespace

TEST_CASE("v values") {
    CHECK(v_value(MoebiusParams(Cx{0, 0}, 0.0)) == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(v_value(MoebiusParams(Cx{0, 0}, 2.2)) == doctest::Approx(-3.0).epsilon(1e-14));

    // gamma = pi/3, theta = gamma/2 - pi/2, |a| = 1/3 sits on the equality locus
    const MoebiusParams locus(std::polar(1.0 / 3.0, M_PI / 6.0 - M_PI / 2.0), M_PI / 3.0);
    CHECK(std::abs(v_value(locus)) < 1e-14);

    CHECK(v_value(MoebiusParams(Cx{0.5, 0}, 0.0)) == doctest::Approx(-5.25).epsilon(1e-14));

    std::mt19937 rng(61);
    std::uniform_real_distribution<double> u(-0.7, 0.7), ug(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 500; ++trial) {
        const MoebiusParams p(Cx{u(rng), u(rng)}, ug(rng));
        CHECK(std::abs(v_value(p) - v_value_squares(p)) < 1e-10);
    }
}

TEST_CASE("u values") {
    CHECK(std::abs(u_value(MoebiusParams(Cx{0, 0}, 0.0)) - Cx{1, 0}) < 1e-14);
    CHECK(std::abs(u_value(MoebiusParams(Cx{0, 0}, M_PI / 3.0)) - Cx{-3, 0}) < 1e-13);
    CHECK(std::abs(u_value(MoebiusParams(Cx{0.5, 0}, 0.0)) - Cx{3.75, 0}) < 1e-14);
}

TEST_CASE("ellipse bound") {
    CHECK(ellipse_bound_holds(MoebiusParams(Cx{0, 0}, 1.0)));
    CHECK(ellipse_bound_holds(MoebiusParams(Cx{0.95, 0}, 0.0)));
    CHECK_FALSE(ellipse_bound_holds(MoebiusParams(Cx{0, 0.9}, 0.0)));
}

TEST_CASE("equality locus") {
    CHECK_FALSE(equality_locus_holds(MoebiusParams(Cx{-0.99, 0}, 0.0))); // needs |a| = 1
    const MoebiusParams locus = equality_locus_point(M_PI / 3.0);
    CHECK(equality_locus_holds(locus));
    CHECK(std::abs(locus.mod_a() - 1.0 / 3.0) < 1e-12);
    CHECK_FALSE(equality_locus_holds(MoebiusParams(Cx{0, 0}, M_PI / 2.0)));
}

TEST_CASE("product modulus of the factor roots") {
    CHECK(ab_modulus(MoebiusParams(Cx{0, 0}, 0.0)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ab_modulus(MoebiusParams(Cx{0, 0}, 1.7)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ab_modulus(MoebiusParams(Cx{0.5, 0}, 0.0)) == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(std::abs(ab_modulus(equality_locus_point(M_PI / 3.0)) - 1.0) < 1e-9);
}

TEST_CASE("the two z0 routes") {
    CHECK(std::abs(z0_closed_form(MoebiusParams(Cx{0, 0}, 0.0)) - Cx{-1.0 / 3.0, 0}) < 1e-14);
    CHECK(std::abs(z0_closed_form(MoebiusParams(Cx{0, 0}, M_PI)) - Cx{-1, 0}) < 1e-13);
    CHECK(std::abs(z0_closed_form(MoebiusParams(Cx{0.5, 0}, 0.0)) - Cx{-5.0 / 7.0, 0}) < 1e-14);

    CHECK(std::abs(z0_from_roots(Cx{0, 0}, Cx{0, 0})) == 0.0);

    const MoebiusDilatation md = convolved_dilatation_moebius(0.0, Cx{0, 0});
    CHECK(std::abs(z0_from_roots(md.fact.A, md.fact.B) - Cx{-1.0 / 3.0, 0}) < 1e-12);

    // |A| = 1 pins |z0| = 1
    const Cx A = unit_phase(0.8), B{0.3, -0.2};
    CHECK(std::abs(std::abs(z0_from_roots(A, B)) - 1.0) < 1e-12);

    std::mt19937 rng(62);
    std::uniform_real_distribution<double> u(-0.7, 0.7), ug(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 1000; ++trial) {
        const MoebiusParams p(Cx{u(rng), u(rng)}, ug(rng));
        if (std::abs(v_value(p)) < 1e-6)
            continue;
        const MoebiusDilatation m = convolved_dilatation_moebius(p.gamma, p.a);
        if (std::abs(1.0 - std::norm(m.fact.A) * std::norm(m.fact.B)) < 1e-12)
            continue;
        const Cx zc = z0_closed_form(p);
        CHECK(std::abs(zc - z0_from_roots(m.fact.A, m.fact.B)) < 1e-9 * std::max(1.0, std::abs(zc)));
    }
}

TEST_CASE("proof identities") {
    CHECK(factorization_residual(MoebiusParams(Cx{0, 0}, 0.0)) < 1e-12);
    CHECK(factorization_residual(MoebiusParams(Cx{0.5, 0}, 0.0)) < 1e-12);

    CHECK(root_location_identity_residual(Cx{0, 0}, Cx{0, 0}) < 1e-15);
    CHECK(root_location_identity_residual(unit_phase(1.1), Cx{0.4, 0.3}) < 1e-12);

    std::mt19937 rng(63);
    std::uniform_real_distribution<double> u(-0.7, 0.7), ug(0.0, 2.0 * M_PI), ud(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const MoebiusParams p(Cx{u(rng), u(rng)}, ug(rng));
        CHECK(factorization_residual(p) < 1e-9 * std::max(1.0, std::norm(u_value(p))));
        CHECK(root_location_identity_residual(Cx{ud(rng), ud(rng)} * 0.7, Cx{ud(rng), ud(rng)} * 0.7) < 1e-10);
    }
}

TEST_CASE("product-modulus bound: sufficiency and the equality locus") {
    std::mt19937 rng(64);
    std::uniform_real_distribution<double> ua(0.0, 1.0), ut(0.0, 2.0 * M_PI);
    int inside = 0, escaped = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        const Cx a = std::polar(ua(rng), ut(rng));
        const double gamma = ut(rng);
        const MoebiusParams p(a, gamma);
        const bool c10 = ellipse_bound_holds(p), c11 = equality_locus_holds(p);
        const double ab = ab_modulus(p);
        if (c10 && !c11) {
            CHECK(ab < 1.0);
            ++inside;
        }
        // contrapositive of the sufficiency direction
        if (ab > 1.0) {
            CHECK_FALSE(c10);
            ++escaped;
        }
        CHECK((ab > 1.0) == (v_value(p) > 0.0));
    }
    CHECK(inside > 1000);
    CHECK(escaped > 1000);

    for (int k = 0; k < 200; ++k) {
        const double gamma = 0.05 + (2.0 * M_PI - 0.1) * k / 200.0;
        // skip the gammas where the locus needs |a| = 1
        if (std::abs(std::sin(1.5 * gamma)) < 1e-3)
            continue;
        CHECK(std::abs(ab_modulus(equality_locus_point(gamma)) - 1.0) < 1e-8);
    }
}

TEST_CASE("the bound is sufficient but not necessary") {
    // Outside the ellipse the product modulus can still be small: the distance
    // between the witness points exceeds 1 on most of the strip |X| < 1,
    // |Y| < 3. Pinned so nobody "fixes" the sweep into asserting the converse.
    const MoebiusParams p(Cx{0, 0.9}, 0.0);
    CHECK_FALSE(ellipse_bound_holds(p));
    CHECK(ab_modulus(p) < 1.0);
    CHECK(ab_modulus(p) == doctest::Approx(0.85439).epsilon(1e-4));
    CHECK(v_value(p) == doctest::Approx(-10.29).epsilon(1e-12));
}

TEST_CASE("inclusion-exclusion of z0 inside the disk") {
    std::mt19937 rng(65);
    std::uniform_real_distribution<double> ua(0.0, 1.0), ut(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 100000; ++trial) {
        const MoebiusParams p(std::polar(ua(rng), ut(rng)), ut(rng));
        if (std::abs(v_value(p)) < 1e-6)
            continue;
        const bool z0_in = std::abs(z0_closed_form(p)) <= 1.0;
        CHECK(z0_in == ellipse_bound_holds(p));
    }
}

TEST_CASE("monomial criterion") {
    const MonomialCheck c1 = check_monomial_univalence(0.0, 0.0, 1);
    CHECK(c1.applicable);
    REQUIRE(c1.witness.has_value());
    CHECK(std::abs(*c1.witness - Cx{-1.0 / 3.0, 0}) < 1e-14);
    CHECK(c1.all_roots_in_disk);

    const MonomialCheck c2 = check_monomial_univalence(1.3, 2.1, 2);
    CHECK(c2.applicable);
    CHECK(c2.all_roots_in_disk);
    CHECK(c2.sup_boundary <= 1.0 + 1e-9);

    CHECK_FALSE(check_monomial_univalence(0.0, 0.0, 3).applicable);

    std::mt19937 rng(66);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 2000; ++trial) {
        const double gamma = u(rng), theta = u(rng);
        const Polynomial t = monomial_numerator_factor(gamma, theta, 1);
        for (Cx r : roots_of(t).roots)
            CHECK(std::abs(r) <= 1.0 + 1e-9);
        const MonomialCheck mc = check_monomial_univalence(gamma, theta, 1);
        CHECK(std::abs(*mc.witness) <= 1.0 + 1e-12);
    }
}

TEST_CASE("moebius criterion report") {
    const CriterionReport r0 = check_moebius_univalence(MoebiusParams(Cx{0, 0}, 0.7));
    CHECK(r0.cond_10a);
    CHECK_FALSE(r0.cond_11);
    CHECK(r0.applicable);
    CHECK_FALSE(r0.b1_warning);

    CHECK_FALSE(check_moebius_univalence(MoebiusParams(Cx{0, 0.9}, 0.0)).applicable);

    const MoebiusParams locus = equality_locus_point(M_PI / 3.0);
    const CriterionReport rl = check_moebius_univalence(locus);
    CHECK(rl.cond_10a); // equality case of the bound
    CHECK(rl.cond_11);
    CHECK_FALSE(rl.applicable);

    const CriterionReport r5 = check_moebius_univalence(MoebiusParams(Cx{0.5, 0}, 0.0));
    CHECK(r5.applicable);
    CHECK(r5.b1_warning);
    REQUIRE(r5.z0_closed.has_value());
    REQUIRE(r5.z0_roots.has_value());
    CHECK(std::abs(*r5.z0_closed - *r5.z0_roots) < 1e-9);
}

TEST_CASE("special-case families") {
    CHECK(special_case_flags(MoebiusParams(Cx{0.8, 0}, 0.0)).right_halfplane);
    CHECK(special_case_flags(MoebiusParams(Cx{0, 0.5}, M_PI)).left_halfplane);
    CHECK_FALSE(special_case_flags(MoebiusParams(Cx{0, 0.5}, 0.0)).right_halfplane);
    CHECK(special_case_flags(MoebiusParams(Cx{0.3, 0.1}, 2.0 * M_PI / 3.0)).gamma_thirds);
    CHECK_FALSE(special_case_flags(MoebiusParams(Cx{0.5, 0}, 1.0)).gamma_thirds);

    // every special case implies the main criterion applies
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    const double gammas[] = {0.0, M_PI, 2.0 * M_PI / 3.0, 4.0 * M_PI / 3.0};
    for (int trial = 0; trial < 2000; ++trial) {
        const MoebiusParams p(Cx{u(rng), u(rng)}, gammas[trial % 4]);
        const SpecialCaseFlags f = special_case_flags(p);
        if (f.gamma_thirds || f.right_halfplane || f.left_halfplane)
            CHECK(check_moebius_univalence(p).applicable);
    }
}

TEST_CASE("counterexample families for high monomial powers") {
    const CounterexampleReport r3 = monomial_failure_witness(3, 0.0);
    CHECK(r3.root_moduli_product == doctest::Approx(1.5).epsilon(1e-8));
    CHECK(std::abs(r3.witness) < 1.0);
    CHECK(r3.witness_modulus > 1.0);

    const CounterexampleReport r4 = monomial_failure_witness(4, 0.0);
    CHECK(r4.root_moduli_product == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(r4.witness_modulus > 1.0);

    const CounterexampleReport rp = monomial_failure_witness(3, M_PI / 2.0);
    CHECK(rp.root_moduli_product == doctest::Approx(1.5).epsilon(1e-8));
    CHECK(rp.witness_modulus > 1.0);

    CHECK_THROWS(monomial_failure_witness(2, 0.0));
}
