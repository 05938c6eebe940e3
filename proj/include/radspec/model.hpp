#pragma once

#include <vector>

namespace radspec {

// Spin projection label of the two decoupled radial channels.
enum class SpinLabel : int { up = +1, down = -1 };

// Parameters of the reduced radial operator
//   L = -d^2/dxi^2 - (1/xi) d/dxi + gamma^2/xi^2 - a/xi + b xi + xi^2.
// Only |gamma| enters, so gamma >= 0; a and b are unrestricted reals (bound
// states exist for all of them).
struct ReducedParams {
    double gamma = 0.0;
    double a = 0.0;
    double b = 0.0;
};

// Constants of the physical model
//   V(rho) = a1 rho^-2 + a2 rho^2 + V0  plus the field couplings,
// with a2 = m omega^2 always derived, never stored.  The field-strength
// constant is named field_norm so it cannot collide with the reduced linear
// coupling b.  g_factor, field_norm and lambda_c enter all formulas only
// through their product.
struct PhysicalParams {
    double m = 1.0;        // mass, > 0
    double omega = 1.0;    // oscillator frequency, > 0
    double g_factor = 0.0;
    double field_norm = 0.0;
    double lambda_c = 0.0;
    double a1 = 0.0;       // inverse-square strength
    double v0 = 0.0;       // potential offset
    int l = 0;             // angular quantum number
    SpinLabel s = SpinLabel::up;

    double a2() const { return m * omega * omega; }
    double coupling() const { return g_factor * field_norm * lambda_c; }

    // convenience for the common "only the product matters" call sites
    static PhysicalParams with_coupling(double m, double omega, double kappa, double a1,
                                        double v0, int l, SpinLabel s);
};

// Map the physical model onto (gamma, a, b):
//   gamma_s = l + (1-s)/2,  gamma^2 = gamma_s^2 + 2 m a1,
//   tau_s = s k gamma_s/(4m) + k/(8m),  alpha = k m,  k = g_factor*field_norm*lambda_c,
//   a = tau_s / (2 m a2)^{1/4},  b = alpha / (2 m a2)^{3/4}.
// Throws AttractiveSingularity when gamma_s^2 + 2 m a1 < 0.
ReducedParams reduce(const PhysicalParams& p);

// Invert W = 2m(E - V0) / sqrt(2 m a2):  E = V0 + w sqrt(2 m a2)/(2m).
double energy_from_w(double w, const PhysicalParams& p);

// All omega in [lo, hi] at which the degree-n termination condition holds for
// the physical configuration (omega field of `base` ignored).  Brackets are
// geometric, `resolution` per decade (0 = default 1024), sign changes refined
// by bisection; every returned root has |c_{n+1}| < 1e-10.  May be empty.
std::vector<double> allowed_omega_scan(const PhysicalParams& base, int n, double lo, double hi,
                                       int resolution = 0);

// The scan's objective: c_{n+1}(a(omega), b(omega)) at w = truncation_w.
double omega_constraint_residual(const PhysicalParams& base, int n, double omega);

}  // namespace radspec
