#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radspec/errors.hpp"
#include "radspec/model.hpp"
#include "radspec/variational.hpp"

#include <cmath>

using namespace radspec;

TEST_CASE("reduction to (gamma, a, b)") {
    // l=1, s=+1, coupling product 4: gamma=1, a=1.5/2^(1/4), b=4/2^(3/4)
    PhysicalParams p;
    p.m = 1.0;
    p.omega = 1.0;
    p.g_factor = 4.0;
    p.field_norm = 1.0;
    p.lambda_c = 1.0;
    p.l = 1;
    p.s = SpinLabel::up;
    const ReducedParams r = reduce(p);
    CHECK(r.gamma == 1.0);
    CHECK(r.a == doctest::Approx(1.5 / std::pow(2.0, 0.25)).epsilon(1e-15));
    CHECK(r.a == doctest::Approx(1.261345).epsilon(1e-6));
    CHECK(r.b == doctest::Approx(4.0 / std::pow(2.0, 0.75)).epsilon(1e-15));
    CHECK(r.b == doctest::Approx(2.378414).epsilon(1e-6));

    // all couplings off
    const PhysicalParams free =
        PhysicalParams::with_coupling(1.0, 1.0, 0.0, 0.0, 0.0, 0, SpinLabel::up);
    const ReducedParams rf = reduce(free);
    CHECK(rf.gamma == 0.0);
    CHECK(rf.a == 0.0);
    CHECK(rf.b == 0.0);

    // inverse-square term too attractive
    PhysicalParams bad = PhysicalParams::with_coupling(1.0, 1.0, 1.0, -1.0, 0.0, 0, SpinLabel::up);
    CHECK_THROWS_AS(reduce(bad), AttractiveSingularity);
}

TEST_CASE("gamma equals l when a1 = 0, s = +1") {
    for (int l = 0; l <= 6; ++l) {
        const PhysicalParams p =
            PhysicalParams::with_coupling(2.0, 0.7, 1.3, 0.0, 0.0, l, SpinLabel::up);
        CHECK(reduce(p).gamma == static_cast<double>(l));
    }
    // s = -1 shifts the channel: gamma_s = l + 1
    const PhysicalParams down =
        PhysicalParams::with_coupling(1.0, 1.0, 0.0, 0.0, 0.0, 2, SpinLabel::down);
    CHECK(reduce(down).gamma == 3.0);
}

TEST_CASE("energy from W") {
    PhysicalParams p;  // m = omega = 1, v0 = 0
    CHECK(energy_from_w(2.0, p) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(energy_from_w(0.0, p) == 0.0);
    p.v0 = 1.0;
    CHECK(energy_from_w(5.75, p) == doctest::Approx(1.0 + 5.75 * std::sqrt(2.0) / 2.0)
                                          .epsilon(1e-15));
    CHECK(energy_from_w(5.75, p) == doctest::Approx(5.065864).epsilon(1e-6));

    // round trip: zeta = 2m(E - V0) reproduces W sqrt(2 m a2)
    for (double m : {0.5, 1.0, 3.0}) {
        for (double omega : {0.25, 1.0, 2.0}) {
            for (double w : {-3.0, 0.0, 5.75}) {
                PhysicalParams q;
                q.m = m;
                q.omega = omega;
                q.v0 = 0.3;
                const double e = energy_from_w(w, q);
                const double zeta = 2.0 * m * (e - q.v0);
                const double back = w * std::sqrt(2.0 * m * q.a2());
                CHECK(std::fabs(zeta - back) <= 1e-12 * (1.0 + std::fabs(back)));
            }
        }
    }
}

TEST_CASE("allowed-omega scan finds the n=1 constraint root") {
    const PhysicalParams base =
        PhysicalParams::with_coupling(1.0, 1.0, 8.0, 0.0, 0.0, 0, SpinLabel::up);
    const std::vector<double> roots = allowed_omega_scan(base, 1, 0.1, 10.0);
    REQUIRE(roots.size() == 1);
    const double omega = roots.front();
    CHECK(omega == doctest::Approx(1.4902348389253).epsilon(1e-9));
    CHECK(std::fabs(omega_constraint_residual(base, 1, omega)) < 1e-10);

    // the constraint is an isolated point, not a boundary of existence:
    // bound states persist at a shifted frequency
    PhysicalParams off = base;
    off.omega = 1.05 * omega;
    const ReducedParams params = reduce(off);
    const BasisSpec basis{params.gamma, 24, 1.0};
    const SpectralResult res = spectrum(params, 3, basis, PrecisionMode::extended, false);
    REQUIRE(res.eigenvalues.size() == 3);
    CHECK(res.eigenvalues[0] < res.eigenvalues[1]);
    CHECK(res.eigenvalues[1] < res.eigenvalues[2]);

    // away from the root the constraint residual is bounded away from zero
    for (double frac : {0.25, 0.5, 0.75}) {
        const double omega_mid = 0.1 + frac * (omega - 0.1);
        CHECK(std::fabs(omega_constraint_residual(base, 1, omega_mid)) > 1e-6);
    }
}

TEST_CASE("allowed-omega scan edge cases") {
    // zero coupling: a(omega) = b(omega) = 0 and c_{n+1} is a nonzero constant
    const PhysicalParams free =
        PhysicalParams::with_coupling(1.0, 1.0, 0.0, 0.0, 0.0, 0, SpinLabel::up);
    CHECK(allowed_omega_scan(free, 1, 0.1, 10.0).empty());
    CHECK(allowed_omega_scan(free, 2, 0.5, 2.0).empty());

    const PhysicalParams base =
        PhysicalParams::with_coupling(1.0, 1.0, 8.0, 0.0, 0.0, 0, SpinLabel::up);
    CHECK_THROWS_AS(allowed_omega_scan(base, 1, -1.0, 5.0), InvalidRange);
    CHECK_THROWS_AS(allowed_omega_scan(base, 1, 5.0, 1.0), InvalidRange);
    CHECK_THROWS_AS(allowed_omega_scan(base, 0, 0.1, 10.0), std::invalid_argument);
}
