#include "radspec/oracle.hpp"

#include "radspec/errors.hpp"
#include "radspec/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace radspec {

namespace {

// integral of xi^p over [lo, hi]; p > -1 throughout (p >= 2*gamma >= 0)
double power_moment(double p, double lo, double hi) {
    return (std::pow(hi, p + 1.0) - std::pow(lo, p + 1.0)) / (p + 1.0);
}

double edge_potential(const ReducedParams& r, double xi) {
    return r.gamma * r.gamma / (xi * xi) - r.a / xi + r.b * xi + xi * xi;
}

struct Level {
    std::vector<double> diag, off;
};

Level assemble_level(const ReducedParams& r, double xi_max, int points) {
    const double h = xi_max / points;
    const double p = 2.0 * r.gamma + 1.0;
    std::vector<double> diag(static_cast<std::size_t>(points));
    std::vector<double> off(static_cast<std::size_t>(points) - 1);
    std::vector<double> inv_sqrt_mass(static_cast<std::size_t>(points));

    for (int i = 0; i < points; ++i) {
        const double lo = i == 0 ? 0.0 : (i - 0.5) * h;
        const double hi = (i + 0.5) * h;
        // potential and mass cell moments are exact power integrals
        const double q = -r.a * power_moment(2.0 * r.gamma, lo, hi) +
                         r.b * power_moment(2.0 * r.gamma + 2.0, lo, hi) +
                         power_moment(2.0 * r.gamma + 3.0, lo, hi);
        const double mass = power_moment(p, lo, hi);
        const double w_right = std::pow((i + 0.5) * h, p);
        const double w_left = i == 0 ? 0.0 : std::pow((i - 0.5) * h, p);
        diag[static_cast<std::size_t>(i)] = (w_left + w_right) / h + q;
        inv_sqrt_mass[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(mass);
        if (i + 1 < points) off[static_cast<std::size_t>(i)] = -w_right / h;
    }
    for (int i = 0; i < points; ++i) {
        const auto si = inv_sqrt_mass[static_cast<std::size_t>(i)];
        diag[static_cast<std::size_t>(i)] *= si * si;
        if (i + 1 < points)
            off[static_cast<std::size_t>(i)] *= si * inv_sqrt_mass[static_cast<std::size_t>(i) + 1];
    }
    return {std::move(diag), std::move(off)};
}

void tail_check(const ReducedParams& r, const GridSpec& grid, const Level& base,
                const std::vector<double>& w, int count) {
    const double w_top = w[static_cast<std::size_t>(count) - 1];
    if (w_top >= edge_potential(r, grid.xi_max)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "fd_spectrum: eigenvalue %d (%.6g) reaches the potential at xi_max=%.4g; "
                      "the domain must grow",
                      count - 1, w_top, grid.xi_max);
        throw DomainTooSmall(msg);
    }
    const std::vector<double> v = tridiag_eigenvector(base.diag, base.off, w_top);
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::fabs(x));
    const double tail = std::fabs(v.back());
    if (!(tail < 1e-8 * vmax)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "fd_spectrum: eigenfunction %d has tail %.3e of max at xi_max=%.4g; "
                      "the domain must grow",
                      count - 1, tail / vmax, grid.xi_max);
        throw DomainTooSmall(msg);
    }
}

// first stage removes h^2, later stages the next-order corrections of the
// cell-lumped scheme (observed h^3)
std::vector<double> richardson(const std::vector<std::vector<double>>& levels) {
    std::vector<std::vector<double>> cur = levels;
    double factor = 4.0;
    while (cur.size() > 1) {
        std::vector<std::vector<double>> next;
        for (std::size_t l = 0; l + 1 < cur.size(); ++l) {
            std::vector<double> e(cur[l].size());
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = (factor * cur[l + 1][k] - cur[l][k]) / (factor - 1.0);
            next.push_back(std::move(e));
        }
        cur = std::move(next);
        factor *= 2.0;
    }
    return cur.front();
}

template <typename Solver>
OracleResult fd_spectrum_impl(const ReducedParams& params, int count, const GridSpec& grid,
                              Solver solve) {
    if (count < 1) throw std::invalid_argument("fd_spectrum: count must be >= 1");
    if (grid.points < 64) throw std::invalid_argument("fd_spectrum: need at least 64 points");
    if (!(grid.xi_max > 0.0)) throw std::invalid_argument("fd_spectrum: xi_max must be positive");
    if (grid.refinement_levels < 1 || grid.refinement_levels > 8)
        throw std::invalid_argument("fd_spectrum: refinement_levels must be in 1..8");

    std::vector<std::vector<double>> per_level;
    Level base;
    for (int l = 0; l < grid.refinement_levels; ++l) {
        const int pts = grid.points << l;
        Level lvl = assemble_level(params, grid.xi_max, pts);
        per_level.push_back(solve(lvl.diag, lvl.off, count));
        if (l == 0) base = std::move(lvl);
    }
    tail_check(params, grid, base, per_level.front(), count);

    OracleResult out;
    out.grid = grid;
    out.eigenvalues = per_level.back();
    out.richardson_estimate = richardson(per_level);
    return out;
}

}  // namespace

GridSpec GridSpec::uniform(double xi_max, int points, int refinement_levels) {
    GridSpec g;
    g.xi_max = xi_max;
    g.points = points;
    g.xi_min = xi_max / points;
    g.refinement_levels = refinement_levels;
    return g;
}

void fd_tridiagonal(const ReducedParams& params, double xi_max, int points,
                    std::vector<double>& diag, std::vector<double>& off) {
    Level lvl = assemble_level(params, xi_max, points);
    diag = std::move(lvl.diag);
    off = std::move(lvl.off);
}

OracleResult fd_spectrum(const ReducedParams& params, int count, const GridSpec& grid) {
    return fd_spectrum_impl(params, count, grid,
                            [](const std::vector<double>& d, const std::vector<double>& e,
                               int k) { return sturm_lowest(d, e, k); });
}

OracleResult fd_spectrum_serial(const ReducedParams& params, int count, const GridSpec& grid) {
    return fd_spectrum_impl(params, count, grid,
                            [](const std::vector<double>& d, const std::vector<double>& e,
                               int k) { return sturm_lowest_serial(d, e, k); });
}

GridSpec auto_grid(const ReducedParams& params, int count) {
    // coarse upper bound for the top requested state; double precision is
    // plenty for a domain estimate
    double w_top = 4.0 * count + 2.0 * params.gamma + 2.0;
    try {
        BasisSpec basis{params.gamma, std::min(count + 8, 16), 1.0};
        const SpectralResult coarse = spectrum(params, count, basis,
                                               PrecisionMode::double_precision, false);
        w_top = coarse.eigenvalues.back();
    } catch (const std::exception&) {
        // keep the oscillator-level fallback
    }
    const double xi_max =
        std::max(2.0 * (std::sqrt(std::max(w_top, 0.0)) + std::fabs(params.b) / 2.0 + 3.0), 8.0);
    // resolve the Coulomb scale near the origin when a is large
    const double h_target =
        std::min(0.008, 0.05 * (2.0 * params.gamma + 1.0) / std::max(std::fabs(params.a), 1.0));
    const int points = std::max(1024, static_cast<int>(std::ceil(xi_max / h_target)));
    return GridSpec::uniform(xi_max, points);
}

OracleResult fd_spectrum_auto(const ReducedParams& params, int count) {
    GridSpec grid = auto_grid(params, count);
    for (int attempt = 0;; ++attempt) {
        try {
            return fd_spectrum(params, count, grid);
        } catch (const DomainTooSmall&) {
            if (attempt >= 4) throw;
            grid = GridSpec::uniform(grid.xi_max * 2.0, grid.points * 2,
                                     grid.refinement_levels);
        }
    }
}

std::pair<double, double> hf_residuals(const ReducedParams& params, int nu, double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("hf_residuals: step must be positive (no division attempted)");
    if (nu < 0) throw std::invalid_argument("hf_residuals: nu must be >= 0");
    const BasisSpec basis{params.gamma, 24, 1.0};
    const int count = nu + 1;

    auto w_at = [&](double a, double b) {
        const ReducedParams p{params.gamma, a, b};
        return spectrum(p, count, basis, PrecisionMode::extended, false)
            .eigenvalues[static_cast<std::size_t>(nu)];
    };
    const double dw_da = (w_at(params.a + step, params.b) - w_at(params.a - step, params.b)) /
                         (2.0 * step);
    const double dw_db = (w_at(params.a, params.b + step) - w_at(params.a, params.b - step)) /
                         (2.0 * step);

    const SpectralResult base = spectrum(params, count, basis, PrecisionMode::extended, false);
    const double exp_inv_xi = expectation_inv_xi(base, nu);
    const double exp_xi = expectation_xi(base, nu);
    return {std::fabs(dw_da + exp_inv_xi), std::fabs(dw_db - exp_xi)};
}

double asymptotic_check(double gamma, int nu, double a, double b) {
    if (!(a >= 10.0)) throw std::invalid_argument("asymptotic_check: requires a >= 10");
    if (nu < 0) throw std::invalid_argument("asymptotic_check: nu must be >= 0");
    const double level = 2.0 * nu + 2.0 * gamma + 1.0;
    // hydrogenic decay rate of the slowest requested state sets the domain
    const GridSpec grid = GridSpec::uniform(40.0 * level / a, 2048);
    const ReducedParams params{gamma, a, b};
    const OracleResult res = fd_spectrum(params, nu + 1, grid);
    const double w = res.richardson_estimate[static_cast<std::size_t>(nu)];
    return std::fabs(w / (a * a) + 1.0 / (level * level));
}

double crosscheck(const ReducedParams& params, int count) {
    if (count < 1) throw std::invalid_argument("crosscheck: count must be >= 1");
    const BasisSpec basis{params.gamma, 30, 1.0};
    const SpectralResult var = spectrum(params, count, basis, PrecisionMode::extended, false);
    const OracleResult fd = fd_spectrum_auto(params, count);
    double dev = 0.0;
    for (int k = 0; k < count; ++k)
        dev = std::max(dev, std::fabs(var.eigenvalues[static_cast<std::size_t>(k)] -
                                      fd.richardson_estimate[static_cast<std::size_t>(k)]));
    return dev;
}

}  // namespace radspec
