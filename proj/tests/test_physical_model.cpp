#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "spincav/constants.hpp"
#include "spincav/errors.hpp"
#include "spincav/params.hpp"

using namespace spincav;
using constants::rad_per_MHz;
using constants::two_pi;

TEST_CASE("sagnac shift: no rotation, no shift") {
    CHECK(sagnac_shift(0.0, 1.48, 1.1e-3, two_pi * 1e10, 0.0, 0.03, DriveDirection::CW) ==
          0.0);
}

TEST_CASE("sagnac shift: CW and CCW are exact negatives") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 50; ++i) {
        const double omega = u(rng) * 1e4;
        const double n = 1.0 + u(rng);
        const double r = u(rng) * 1e-3;
        const double wa = u(rng) * two_pi * 1e10;
        const double dn = 0.01 * u(rng);
        const double lambda = two_pi * constants::speed_of_light / wa;
        const double cw = sagnac_shift(omega, n, r, wa, dn, lambda, DriveDirection::CW);
        const double ccw = sagnac_shift(omega, n, r, wa, dn, lambda, DriveDirection::CCW);
        CHECK(cw == -ccw);
    }
}

TEST_CASE("sagnac shift: regression tuple giving 1 MHz") {
    // n = 1.48, r = 1.1 mm, omega_a = 2pi x 10 GHz, dn/dlambda = 0 and the
    // spin rate below land the shift at exactly 2pi x 1 MHz
    const double spin_rate = 3.388416711266e+07;
    const double shift = sagnac_shift(spin_rate, 1.48, 1.1e-3, two_pi * 1e10, 0.0,
                                      0.029979, DriveDirection::CW);
    CHECK(shift / rad_per_MHz == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sagnac shift: linear in spin rate, odd under direction") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    for (int i = 0; i < 50; ++i) {
        const double omega = u(rng) * 1e4;
        const double n = 1.0 + u(rng);
        const double r = u(rng) * 1e-3;
        const double wa = u(rng) * two_pi * 1e10;
        const double one =
            sagnac_shift(omega, n, r, wa, 0.0, 0.03, DriveDirection::CW);
        const double twice =
            sagnac_shift(2.0 * omega, n, r, wa, 0.0, 0.03, DriveDirection::CW);
        CHECK(twice == doctest::Approx(2.0 * one).epsilon(1e-14));
    }
}

TEST_CASE("sagnac shift: refractive index at or below 1 is out of model") {
    CHECK_THROWS_AS(
        sagnac_shift(1e4, 1.0, 1e-3, two_pi * 1e10, 0.0, 0.03, DriveDirection::CW),
        DomainError);
    CHECK_THROWS_AS(
        sagnac_shift(1e4, 0.9, 1e-3, two_pi * 1e10, 0.0, 0.03, DriveDirection::CW),
        DomainError);
}

TEST_CASE("thermal occupation: zero temperature limit is exact") {
    CHECK(thermal_occupation(two_pi * 1e10, 0.0) == 0.0);
    CHECK(thermal_occupation(two_pi * 1e3, 0.0) == 0.0);
}

TEST_CASE("thermal occupation: 10 GHz at 100 mK") {
    // Bose-Einstein with CODATA constants: hbar*omega/kB T = h*1e10/(kB*0.1)
    const double expected = 8.304373388861993e-03;
    CHECK(thermal_occupation(two_pi * 1e10, 0.100) ==
          doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("thermal occupation: 10 GHz at 10 mK is below 1e-20") {
    CHECK(thermal_occupation(two_pi * 1e10, 0.010) < 1e-20);
    CHECK(thermal_occupation(two_pi * 1e10, 0.010) > 0.0);
}

TEST_CASE("thermal occupation: strictly increasing in T, decreasing in omega") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> logw(std::log(two_pi * 1e8),
                                                std::log(two_pi * 1e11));
    std::uniform_real_distribution<double> logT(std::log(2e-3), std::log(10.0));
    for (int i = 0; i < 200; ++i) {
        const double w = std::exp(logw(rng));
        const double T = std::exp(logT(rng));
        // keep the occupation representable so strictness is meaningful
        if (constants::hbar * w / (constants::boltzmann * T) > 500.0) continue;
        CHECK(thermal_occupation(w, 1.01 * T) > thermal_occupation(w, T));
        CHECK(thermal_occupation(1.01 * w, T) < thermal_occupation(w, T));
    }
}

TEST_CASE("thermal occupation: domain checks") {
    CHECK_THROWS_AS(thermal_occupation(0.0, 0.1), DomainError);
    CHECK_THROWS_AS(thermal_occupation(-1.0, 0.1), DomainError);
    CHECK_THROWS_AS(thermal_occupation(1.0, -0.1), DomainError);
}

TEST_CASE("rabi frequency: zero power, square-root scaling") {
    const double ka = rad_per_MHz;
    const double wl = two_pi * 1e10;
    CHECK(rabi_frequency(0.0, ka, wl) == 0.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(1e-6, 1e3);
    for (int i = 0; i < 50; ++i) {
        const double P = u(rng);
        CHECK(rabi_frequency(4.0 * P, ka, wl) ==
              doctest::Approx(2.0 * rabi_frequency(P, ka, wl)).epsilon(1e-14));
    }
}

TEST_CASE("rabi frequency: inversion anchor") {
    // kappa_a/2pi = 1 MHz, omega_L/2pi = 10 GHz; P chosen by inverting the
    // formula for epsilon0/2pi = 100 MHz
    const double ka = rad_per_MHz;
    const double wl = two_pi * 1e10;
    const double target = 100.0 * rad_per_MHz;
    const double P = target * target * wl / (2.0 * ka);
    CHECK(rabi_frequency(P, ka, wl) == doctest::Approx(target).epsilon(1e-12));
}

TEST_CASE("params validation names the offending field") {
    SystemParams p;
    p.omega_a = two_pi * 1e10;
    p.delta_a = 10 * rad_per_MHz;
    p.delta_m = {-10 * rad_per_MHz, 10 * rad_per_MHz};
    p.kappa_a = rad_per_MHz;
    p.kappa_m = {rad_per_MHz, rad_per_MHz};
    p.g = {2 * rad_per_MHz, 2 * rad_per_MHz};
    p.kerr = KerrShift{{rad_per_MHz, rad_per_MHz}};
    p.sagnac = SagnacShift{rad_per_MHz};
    p.temperature = 0.010;
    CHECK_NOTHROW(validate(p));

    SystemParams bad = p;
    bad.kappa_a = 0.0;
    CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("kappa_a"), InvalidParamsError);
    bad = p;
    bad.temperature = -1.0;
    CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("temperature"),
                         InvalidParamsError);
    bad = p;
    bad.g[1] = -1.0;
    CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("g2"), InvalidParamsError);
}

TEST_CASE("mode frequencies: lab-frame reconstruction") {
    SystemParams p;
    p.omega_a = two_pi * 1e10;
    p.delta_a = 10 * rad_per_MHz;
    p.delta_m = {-10 * rad_per_MHz, 10 * rad_per_MHz};
    p.kappa_a = rad_per_MHz;
    p.kappa_m = {rad_per_MHz, rad_per_MHz};
    p.g = {0.0, 0.0};
    p.kerr = KerrShift{{0.0, 0.0}};
    p.sagnac = SagnacShift{0.0};
    p.temperature = 0.0;
    const double wl = drive_frequency(p);
    CHECK(wl == p.omega_a - p.delta_a);
    CHECK(mode_frequency(p, ModeIndex::Cavity) == p.omega_a);
    CHECK(mode_frequency(p, ModeIndex::Magnon1) == wl + p.delta_m[0]);
    CHECK(mode_frequency(p, ModeIndex::Magnon2) == wl + p.delta_m[1]);
}

TEST_CASE("resolve sagnac: physical variant matches the direct formula") {
    SystemParams p;
    p.omega_a = two_pi * 1e10;
    p.delta_a = 0.0;
    p.delta_m = {0.0, 0.0};
    p.kappa_a = rad_per_MHz;
    p.kappa_m = {rad_per_MHz, rad_per_MHz};
    p.g = {0.0, 0.0};
    p.kerr = KerrShift{{0.0, 0.0}};
    p.sagnac = SagnacPhysical{3.388416711266e+07, 1.48, 1.1e-3, 0.0, DriveDirection::CW};
    p.temperature = 0.0;
    CHECK(resolve_sagnac_shift(p) / rad_per_MHz == doctest::Approx(1.0).epsilon(1e-9));
    std::get<SagnacPhysical>(p.sagnac).direction = DriveDirection::CCW;
    CHECK(resolve_sagnac_shift(p) / rad_per_MHz == doctest::Approx(-1.0).epsilon(1e-9));
}
