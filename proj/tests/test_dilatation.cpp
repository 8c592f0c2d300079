#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "harmconv/dilatation.hpp"
#include "harmconv/harmonic_map.hpp"
#include "oracles.hpp"

using namespace harmconv;

namespace {

double pointwise_distance(const RationalMap& a, const RationalMap& b, int samples = 256, double radius = 0.8) {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const Cx z = std::polar(radius * (k + 1) / samples, 2.0 * M_PI * k * 0.618033988749895);
        worst = std::max(worst, std::abs(eval(a, z) - eval(b, z)));
    }
    return worst;
}

} // namespace

TEST_CASE("general formula: worked examples") {
    // gamma = pi/2, omega = z: i z (z^2 - z/2 + i/2)/(1 - z/2 - (i/2) z^2)
    const RationalMap ot = convolved_dilatation(M_PI / 2.0, RationalMap::monomial(Cx{1, 0}, 1));
    CHECK(ot.power == 1);
    CHECK(std::abs(ot.unit * ot.num.coeff(2) - Cx{0, 1}) < 1e-12);
    CHECK(std::abs(ot.unit * ot.num.coeff(1) - Cx{0, 1} * Cx{-0.5, 0}) < 1e-12);
    CHECK(std::abs(ot.unit * ot.num.coeff(0) - Cx{0, 1} * Cx{0, 0.5}) < 1e-12);
    CHECK(std::abs(ot.den.coeff(0) - Cx{1, 0}) < 1e-12);
    CHECK(std::abs(ot.den.coeff(1) - Cx{-0.5, 0}) < 1e-12);
    CHECK(std::abs(ot.den.coeff(2) - Cx{0, -0.5}) < 1e-12);

    // omega = 0 gives the zero map
    const RationalMap z0 = convolved_dilatation(1.0, RationalMap::zero());
    CHECK(std::abs(eval(z0, Cx{0.5, 0.3})) == 0.0);

    // gamma = 0, omega = -z reduces to z(2z+1)/(2+z)
    const RationalMap f00 = convolved_dilatation(0.0, RationalMap::monomial(Cx{-1, 0}, 1));
    CHECK(f00.power == 1);
    CHECK(f00.num.degree() == 1);
    CHECK(f00.den.degree() == 1);
    const Cx z{0.35, -0.2};
    CHECK(std::abs(eval(f00, z) - z * (2.0 * z + 1.0) / (2.0 + z)) < 1e-12);
}

TEST_CASE("left half-plane specialization") {
    // omega = z: z(z^2 + z/2 - 1/2)/(1 + z/2 - z^2/2), display form has a
    // common boundary factor z + 1; values must match everywhere.
    const RationalMap ot = convolved_dilatation_left_halfplane(RationalMap::monomial(Cx{1, 0}, 1));
    for (int k = 0; k < 64; ++k) {
        const Cx z = std::polar(0.75 * (k + 1) / 64.0, 0.37 * k);
        const Cx display = z * (z * z + 0.5 * z - 0.5) / (1.0 + 0.5 * z - 0.5 * z * z);
        CHECK(std::abs(eval(ot, z) - display) < 1e-12);
    }

    const RationalMap z0 = convolved_dilatation_left_halfplane(RationalMap::zero());
    CHECK(std::abs(eval(z0, Cx{0.2, 0.2})) == 0.0);

    // omega = -z^2 collapses to z^2
    const RationalMap sq = convolved_dilatation_left_halfplane(RationalMap::monomial(Cx{-1, 0}, 2));
    CHECK(sq.power == 2);
    CHECK(sq.num.degree() == 0);
    CHECK(sq.den.degree() == 0);
    const Cx w{0.4, 0.1};
    CHECK(std::abs(eval(sq, w) - w * w) < 1e-12);

    // matches the general route at gamma = pi
    std::mt19937 rng(51);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    for (int trial = 0; trial < 10; ++trial) {
        const RationalMap omega = RationalMap::moebius(Cx{u(rng), u(rng)});
        CHECK(pointwise_distance(convolved_dilatation_left_halfplane(omega), convolved_dilatation(M_PI, omega)) <
              1e-12);
    }
}

TEST_CASE("monomial dilatations") {
    // gamma = pi/2, theta = 0, n = 1: prefactor i z, numerator z^2 - z/2 + i/2
    const RationalMap m1 = convolved_dilatation_monomial(M_PI / 2.0, 0.0, 1);
    CHECK(m1.power == 1);
    CHECK(std::abs(m1.unit - Cx{0, 1}) < 1e-12);
    CHECK(std::abs(m1.num.coeff(2) - Cx{1, 0}) < 1e-12);
    CHECK(std::abs(m1.num.coeff(1) - Cx{-0.5, 0}) < 1e-12);
    CHECK(std::abs(m1.num.coeff(0) - Cx{0, 0.5}) < 1e-12);

    // gamma = pi, theta = pi, n = 2 collapses to z^2
    const RationalMap m2 = convolved_dilatation_monomial(M_PI, M_PI, 2);
    const Cx z{-0.3, 0.45};
    CHECK(std::abs(eval(m2, z) - z * z) < 1e-12);

    // f0 * f0 through the monomial route
    const RationalMap m3 = convolved_dilatation_monomial(0.0, M_PI, 1);
    CHECK(std::abs(eval(m3, z) - z * (2.0 * z + 1.0) / (2.0 + z)) < 1e-12);
    CHECK(sup_modulus_on_circle(m3, 0.97, 512) < 1.0);

    // matches the general formula
    std::mt19937 rng(52);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 12; ++trial) {
        const double gamma = u(rng), theta = u(rng);
        const int n = 1 + static_cast<int>(rng() % 2);
        CHECK(pointwise_distance(convolved_dilatation_monomial(gamma, theta, n),
                                 convolved_dilatation(gamma, RationalMap::monomial(unit_phase(theta), n))) < 1e-12);
    }
}

TEST_CASE("monomial boundary unimodularity") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 8; ++trial) {
        const RationalMap ot = convolved_dilatation_monomial(u(rng), u(rng), 1);
        double worst = 0.0;
        for (int k = 0; k < 1024; ++k) {
            const Cx z = std::polar(1.0, 2.0 * M_PI * k / 1024.0);
            worst = std::max(worst, std::abs(std::abs(eval(ot, z)) - 1.0));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("moebius factorization") {
    // a = 0: A + B = e^{2i gamma}/2, AB = e^{i gamma}/2
    for (double gamma : {0.0, 0.9, 2.6}) {
        const MoebiusDilatation md = convolved_dilatation_moebius(gamma, Cx{0, 0});
        CHECK(std::abs(md.fact.A + md.fact.B - 0.5 * unit_phase(2.0 * gamma)) < 1e-12);
        CHECK(std::abs(md.fact.A * md.fact.B - 0.5 * unit_phase(gamma)) < 1e-12);
    }

    const MoebiusDilatation md0 = convolved_dilatation_moebius(0.0, Cx{0, 0});
    CHECK(std::abs(md0.fact.t.coeff(1) - Cx{0.5, 0}) < 1e-14);
    CHECK(std::abs(md0.fact.t.coeff(0) - Cx{0.5, 0}) < 1e-14);
    CHECK(std::abs(std::abs(md0.fact.A * md0.fact.B) - 0.5) < 1e-14);

    const MoebiusDilatation md5 = convolved_dilatation_moebius(0.0, Cx{0.5, 0});
    CHECK(std::abs(std::abs(md5.fact.A * md5.fact.B) - 0.75) < 1e-12);

    std::mt19937 rng(54);
    std::uniform_real_distribution<double> u(-0.6, 0.6), ug(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 12; ++trial) {
        const Cx a{u(rng), u(rng)};
        const double gamma = ug(rng);
        const MoebiusDilatation md = convolved_dilatation_moebius(gamma, a);
        // (z+A)(z+B) expands back to the quadratic
        const Polynomial expand =
            mul(Polynomial(std::vector<Cx>{md.fact.A, {1, 0}}), Polynomial(std::vector<Cx>{md.fact.B, {1, 0}}));
        for (int k = 0; k <= 2; ++k)
            CHECK(std::abs(expand.coeff(k) - md.fact.t.coeff(k)) < 1e-10);
        // unimodular phase and agreement with the general formula
        CHECK(std::abs(std::abs(unit_phase(md.fact.phi)) - 1.0) < 1e-12);
        CHECK(pointwise_distance(md.map, convolved_dilatation(gamma, RationalMap::moebius(a))) < 1e-10);
    }
}

TEST_CASE("dilatation vanishes at the origin") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> u(-0.5, 0.5), ug(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMap omega = trial % 2 ? RationalMap::moebius(Cx{u(rng), u(rng)})
                                      : RationalMap::monomial(unit_phase(ug(rng)), 1 + trial % 2);
        const RationalMap ot = convolved_dilatation(ug(rng), omega);
        CHECK(ot.power >= 1);
        CHECK(std::abs(eval(ot, Cx{0, 0})) == 0.0);
    }
}

TEST_CASE("series-ratio oracle agrees with the closed forms") {
    std::mt19937 rng(56);
    std::uniform_real_distribution<double> u(-0.6, 0.6), ug(0.0, 2.0 * M_PI), ur(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double gamma = ug(rng);
        RationalMap omega;
        if (trial % 3 == 0)
            omega = RationalMap::monomial(unit_phase(ug(rng)), 1 + trial % 2);
        else
            omega = RationalMap::moebius(Cx{u(rng), u(rng)});

        const HarmonicMap f = shear_slanted(gamma, omega, 256);
        const auto oracle = testing::series_dilatation(f);
        const RationalMap ot = convolved_dilatation(gamma, omega);
        for (int k = 0; k < 64; ++k) {
            const Cx z = std::polar(0.8 * ur(rng), 2.0 * M_PI * ur(rng));
            CHECK(std::abs(oracle(z) - eval(ot, z)) < 1e-8);
        }
    }
}
