#pragma once

#include <utility>
#include <vector>

namespace radspec {

// Power-series factor P(xi) of the ansatz R = xi^gamma e^{-b xi/2 - xi^2/2} P(xi).
// coeffs[j] = c_j with c_0 = 1; every entry satisfies the three-term recurrence
//   c_{j+2} = [b(2g+2j+3) - 2a] / [2(j+2)(2g+j+2)] c_{j+1}
//           + [4(2g+2j+2-w) - b^2] / [4(j+2)(2g+j+2)] c_j,   c_{-1}=0, c_0=1.
struct RecurrenceSeries {
    double gamma = 0.0;
    double a = 0.0;
    double b = 0.0;
    double w = 0.0;
    std::vector<double> coeffs;
};

// Termination data for one (gamma, n, b): the shared eigenvalue
// w = (8(gamma+n+1) - b^2)/4 and the n+1 real roots of c_{n+1}(a) = 0,
// strictly ascending.
struct TruncationSolution {
    double gamma = 0.0;
    int n = 0;
    double b = 0.0;
    double w = 0.0;
    std::vector<double> a_roots;
};

// Run the recurrence through index jmax.  gamma >= 0, jmax >= 1.
RecurrenceSeries recurrence_coefficients(double gamma, double a, double b, double w, int jmax);

// Termination eigenvalue (8(gamma+n+1) - b^2)/4.  n >= 1.
double truncation_w(double gamma, int n, double b);

// c_{n+1} as a polynomial in a (w fixed at truncation_w) and its n+1 real
// roots.  Throws RootCountMismatch if the count comes up short numerically.
TruncationSolution truncation_a_roots(double gamma, int n, double b);

// All real roots b of c_{n+1}(a; b) = 0 with w = truncation_w(gamma, n, b)
// substituted (the b^2 in w cancels the recurrence's b^2 term), ascending.
std::vector<double> truncation_b_roots(double gamma, int n, double a);

// n = 1 closed form: the two roots (2b(gamma+1) -+ sqrt(b^2 + 8(2gamma+1)))/2.
// Oracle for truncation_a_roots.
std::pair<double, double> closed_form_n1(double gamma, double b);

// Left side of the n = 2 termination cubic; zero iff (a, b) lies on an n=2
// curve.  Oracle for truncation_a_roots / truncation_b_roots.
double cubic_n2_residual(double gamma, double a, double b);

// Evaluate c_{n+1} (and optionally d c_{n+1}/da) directly from the recurrence;
// used for residual checks and Newton polish without polynomial cancellation.
double truncation_residual(double gamma, double a, double b, double w, int n,
                           double* dres_da = nullptr);

// R(xi) = xi^gamma e^{-b xi/2 - xi^2/2} P(xi) with P the degree-n polynomial
// from the series.  Requires the tail beyond degree n to vanish (< 1e-10),
// else throws NotTruncated.  xi >= 0 (0^0 := 1 so gamma = 0 is fine at 0).
double polynomial_wavefunction(const RecurrenceSeries& series, int n, double xi);

}  // namespace radspec
