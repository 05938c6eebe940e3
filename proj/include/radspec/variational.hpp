#pragma once

#include "radspec/linalg.hpp"
#include "radspec/model.hpp"

#include <memory>
#include <string>
#include <vector>

namespace radspec {

enum class PrecisionMode { double_precision, extended };

// Basis u_j(xi) = xi^{gamma+j} e^{-scale xi^2/2}, j = 0..size-1, under the
// measure xi dxi.  scale = 1 is the reference choice everywhere.  The Gram
// matrix of these functions is exponentially ill-conditioned in size, hence
// the extended solve path; double precision holds up to size ~19 before the
// Cholesky guard trips.
struct BasisSpec {
    double gamma = 0.0;
    int size = 40;
    double scale = 1.0;
};

// Overlap S and operator matrix H = <u_i, L u_j>, both symmetric; H is
// symmetrized as (H+H^T)/2 after the assembly asymmetry is recorded.
struct MatrixPair {
    SquareMatrix<double> overlap;
    SquareMatrix<double> op;
    double max_asymmetry = 0.0;  // max |H_ij - H_ji| / (1 + |H_ij|) before symmetrization
};

namespace detail {
struct ExtendedVectors;  // extended-precision copies for stable quadratic forms
}

// Lowest eigenvalues (ascending, strict) and S-normalized eigenvectors of a
// Rayleigh-Ritz solve; every eigenvalue is an upper bound to the true one.
struct SpectralResult {
    ReducedParams params;
    BasisSpec basis;
    PrecisionMode mode = PrecisionMode::extended;
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> vectors;
    double converged_digits = 0.0;  // agreement estimate vs the size-2 run; NaN if skipped
    std::shared_ptr<const detail::ExtendedVectors> big;  // present in extended mode
};

// Gram integral <u_i, u_j> = Gamma(gamma+(i+j)/2+1) / (2 scale^{gamma+(i+j)/2+1}).
double overlap_element(double gamma, int i, int j, double scale);

// Assemble (S, H) from the closed-form Gamma integrals.  Requires
// basis.gamma == params.gamma.
MatrixPair operator_matrix(const ReducedParams& params, const BasisSpec& basis);

// Solve H v = W S v for the lowest `count` states.  Throws
// IllConditionedOverlap when the Cholesky of S breaks down.  The size-2
// companion run behind converged_digits can be skipped for batch callers.
SpectralResult spectrum(const ReducedParams& params, int count, const BasisSpec& basis,
                        PrecisionMode mode = PrecisionMode::extended,
                        bool estimate_convergence = true);

// <xi> and <1/xi> in state nu, from the closed-form moment matrices.
double expectation_xi(const SpectralResult& result, int nu);
double expectation_inv_xi(const SpectralResult& result, int nu);

// R_nu(xi) = sum_j v_j xi^{gamma+j} e^{-scale xi^2/2}, normalized so that
// the integral of |R|^2 xi dxi is 1.  xi >= 0 (0^0 := 1).
double wavefunction_eval(const SpectralResult& result, int nu, double xi);

// Decimal rendering of eigenvalue nu at the solve's working precision:
// extended digits when the extended path produced the result, shortest
// double round-trip otherwise.
std::string eigenvalue_string(const SpectralResult& result, int nu, int digits = 24);

}  // namespace radspec
