#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radspec/oracle.hpp"
#include "radspec/sturm.hpp"
#include "radspec/sweep.hpp"

using namespace radspec;

// The OpenMP kernels split strictly independent work items, so they must
// reproduce the serial reference bit for bit.

TEST_CASE("sturm kernel matches the serial reference exactly") {
    std::vector<double> diag, off;
    fd_tridiagonal(ReducedParams{0.3, 1.0, -1.0}, 9.0, 2000, diag, off);
    const std::vector<double> par = sturm_lowest(diag, off, 8);
    const std::vector<double> ser = sturm_lowest_serial(diag, off, 8);
    REQUIRE(par.size() == ser.size());
    for (std::size_t k = 0; k < par.size(); ++k) CHECK(par[k] == ser[k]);
}

TEST_CASE("fd spectrum kernel matches the serial reference exactly") {
    const GridSpec grid = GridSpec::uniform(8.0, 512);
    const OracleResult par = fd_spectrum(ReducedParams{0.0, 2.0, 1.0}, 4, grid);
    const OracleResult ser = fd_spectrum_serial(ReducedParams{0.0, 2.0, 1.0}, 4, grid);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(par.eigenvalues[k] == ser.eigenvalues[k]);
        CHECK(par.richardson_estimate[k] == ser.richardson_estimate[k]);
    }
}

TEST_CASE("sweep kernel matches the serial reference exactly") {
    SweepRequest req;
    req.gamma = 0.0;
    req.b = 1.0;
    req.a_min = -1.0;
    req.a_max = 3.0;
    req.steps = 9;
    req.nu_max = 2;
    req.n_max = 2;
    req.basis_size = 14;
    req.mode = PrecisionMode::double_precision;

    const SweepTable par = sweep_table(req);
    const SweepTable ser = sweep_table_serial(req);
    REQUIRE(par.rows.size() == ser.rows.size());
    REQUIRE(par.overlay.size() == ser.overlay.size());
    CHECK(par.failures == ser.failures);
    for (std::size_t i = 0; i < par.rows.size(); ++i) {
        CHECK(par.rows[i].a == ser.rows[i].a);
        CHECK(par.rows[i].nu == ser.rows[i].nu);
        CHECK(par.rows[i].w == ser.rows[i].w);
        CHECK(par.rows[i].ok == ser.rows[i].ok);
    }
    for (std::size_t i = 0; i < par.overlay.size(); ++i) {
        CHECK(par.overlay[i].a_root == ser.overlay[i].a_root);
        CHECK(par.overlay[i].w == ser.overlay[i].w);
    }
}

TEST_CASE("sweep table structure") {
    SweepRequest req;
    req.gamma = 0.0;
    req.b = 1.0;
    req.a_min = 0.0;
    req.a_max = 1.0;
    req.steps = 5;
    req.nu_max = 1;
    req.n_max = 3;
    req.basis_size = 12;
    req.mode = PrecisionMode::double_precision;
    const SweepTable tab = sweep_table(req);

    // rows sorted by (nu, a)
    REQUIRE(tab.rows.size() == 10);
    for (std::size_t i = 0; i + 1 < tab.rows.size(); ++i) {
        const auto& r = tab.rows[i];
        const auto& s = tab.rows[i + 1];
        CHECK((r.nu < s.nu || (r.nu == s.nu && r.a < s.a)));
    }
    // overlay w values satisfy the termination formula exactly
    int count = 0;
    for (const auto& pt : tab.overlay) {
        CHECK(pt.w == (8.0 * (pt.n + 1) - 1.0) / 4.0);
        ++count;
    }
    CHECK(count == 2 + 3 + 4);  // n+1 points for n = 1..3
}
