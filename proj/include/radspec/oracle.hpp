#pragma once

#include "radspec/model.hpp"
#include "radspec/variational.hpp"

#include <utility>
#include <vector>

namespace radspec {

// Uniform-grid description for the finite-difference solve.  The continuum
// problem is posed on [0, xi_max] with a regularity (zero-flux) cell at the
// origin and a Dirichlet end at xi_max; unknowns sit at xi_i = i*h,
// i = 0..points-1, h = xi_max/points.  xi_min is maintained as the first
// positive node, i.e. one spacing.
struct GridSpec {
    double xi_min = 0.0;
    double xi_max = 0.0;
    int points = 0;
    int refinement_levels = 3;

    static GridSpec uniform(double xi_max, int points, int refinement_levels = 3);
};

struct OracleResult {
    std::vector<double> eigenvalues;          // finest-grid values, ascending
    std::vector<double> richardson_estimate;  // extrapolated across the levels
    GridSpec grid;
};

// Symmetric tridiagonal discretization of the reduced operator.  The radial
// equation is solved in the substituted variable v = R / xi^gamma (analytic
// at the origin), in flux form with weight xi^{2 gamma + 1} and exact
// per-cell power moments, then symmetrized by the diagonal mass congruence.
// Central differences on the Liouville u-form lose their order for
// gamma < 1/2 (the (gamma^2 - 1/4)/xi^2 coefficient); this form converges
// at clean second order for every gamma >= 0.
void fd_tridiagonal(const ReducedParams& params, double xi_max, int points,
                    std::vector<double>& diag, std::vector<double>& off);

// Lowest `count` eigenvalues on grid, grid/2, ... with h^2-then-h^3
// Richardson extrapolation.  Throws DomainTooSmall when the count-th
// eigenfunction has a tail at xi_max above 1e-8 of its maximum (or lies
// above the edge potential).
OracleResult fd_spectrum(const ReducedParams& params, int count, const GridSpec& grid);
OracleResult fd_spectrum_serial(const ReducedParams& params, int count, const GridSpec& grid);

// Domain and resolution chosen from a coarse variational guess; doubles the
// domain on DomainTooSmall.
GridSpec auto_grid(const ReducedParams& params, int count);
OracleResult fd_spectrum_auto(const ReducedParams& params, int count);

// Hellmann-Feynman residuals (|dW/da + <1/xi>|, |dW/db - <xi>|) for state nu:
// derivatives by central differences of the variational eigenvalue over
// `step`, expectations from the variational eigenvector.
std::pair<double, double> hf_residuals(const ReducedParams& params, int nu, double step = 1e-4);

// |W_nu / a^2 + 1/(2 nu + 2 gamma + 1)^2| at large a, via the
// finite-difference solver on a domain scaled to the hydrogenic length.
// Requires a >= 10.
double asymptotic_check(double gamma, int nu, double a, double b);

// Max |variational - extrapolated oracle| over the lowest `count` states.
double crosscheck(const ReducedParams& params, int count);

}  // namespace radspec
