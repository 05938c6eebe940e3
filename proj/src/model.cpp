#include "radspec/model.hpp"

#include "radspec/errors.hpp"
#include "radspec/frobenius.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace radspec {

PhysicalParams PhysicalParams::with_coupling(double m, double omega, double kappa, double a1,
                                             double v0, int l, SpinLabel s) {
    PhysicalParams p;
    p.m = m;
    p.omega = omega;
    p.g_factor = kappa;   // the three factors only matter as a product
    p.field_norm = 1.0;
    p.lambda_c = 1.0;
    p.a1 = a1;
    p.v0 = v0;
    p.l = l;
    p.s = s;
    return p;
}

ReducedParams reduce(const PhysicalParams& p) {
    if (!(p.m > 0.0)) throw std::invalid_argument("reduce: mass must be positive");
    if (!(p.omega > 0.0)) throw std::invalid_argument("reduce: omega must be positive");
    const double s = static_cast<double>(static_cast<int>(p.s));
    const double gamma_s = p.l + (1.0 - s) / 2.0;
    const double delta_sq = gamma_s * gamma_s + 2.0 * p.m * p.a1;
    if (delta_sq < 0.0) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "reduce: gamma_s^2 + 2 m a1 = %g < 0; the inverse-square term is too "
                      "attractive and the reduced operator is undefined",
                      delta_sq);
        throw AttractiveSingularity(msg);
    }
    const double k = p.coupling();
    const double tau_s = s * k * gamma_s / (4.0 * p.m) + k / (8.0 * p.m);
    const double alpha = k * p.m;
    const double scale = 2.0 * p.m * p.a2();
    ReducedParams r;
    r.gamma = std::sqrt(delta_sq);
    r.a = tau_s / std::pow(scale, 0.25);
    r.b = alpha / std::pow(scale, 0.75);
    return r;
}

double energy_from_w(double w, const PhysicalParams& p) {
    if (!(p.m > 0.0)) throw std::invalid_argument("energy_from_w: mass must be positive");
    if (!(p.omega > 0.0)) throw std::invalid_argument("energy_from_w: omega must be positive");
    return p.v0 + w * std::sqrt(2.0 * p.m * p.a2()) / (2.0 * p.m);
}

double omega_constraint_residual(const PhysicalParams& base, int n, double omega) {
    PhysicalParams p = base;
    p.omega = omega;
    const ReducedParams r = reduce(p);
    const double w = truncation_w(r.gamma, n, r.b);
    return truncation_residual(r.gamma, r.a, r.b, w, n);
}

std::vector<double> allowed_omega_scan(const PhysicalParams& base, int n, double lo, double hi,
                                       int resolution) {
    if (!(lo > 0.0) || !(hi > 0.0) || !(lo < hi))
        throw InvalidRange("allowed_omega_scan: range must satisfy 0 < lo < hi");
    if (n < 1) throw std::invalid_argument("allowed_omega_scan: the truncation index n starts at 1");
    const double decades = std::log10(hi / lo);
    const int brackets = resolution > 0
                             ? resolution
                             : std::max(8, static_cast<int>(std::ceil(1024.0 * decades)));

    // Only strict sign changes are brackets.  An identically vanishing
    // constraint (zero coupling with even n: the bare-oscillator polynomial
    // states) therefore yields an empty set, not a continuum.
    std::vector<double> roots;
    double x_prev = lo;
    double f_prev = omega_constraint_residual(base, n, x_prev);
    for (int k = 1; k <= brackets; ++k) {
        const double x = lo * std::pow(hi / lo, static_cast<double>(k) / brackets);
        const double f = omega_constraint_residual(base, n, x);
        if (f == 0.0 && f_prev != 0.0) {
            roots.push_back(x);
        } else if ((f_prev < 0.0 && f > 0.0) || (f_prev > 0.0 && f < 0.0)) {
            double xl = x_prev, xr = x, fl = f_prev;
            for (int it = 0; it < 200; ++it) {
                const double xm = 0.5 * (xl + xr);
                if (xm == xl || xm == xr) break;
                const double fm = omega_constraint_residual(base, n, xm);
                if (fl * fm <= 0.0) {
                    xr = xm;
                } else {
                    xl = xm;
                    fl = fm;
                }
            }
            roots.push_back(0.5 * (xl + xr));
        }
        x_prev = x;
        f_prev = f;
    }
    // keep only roots that satisfy the residual contract
    std::vector<double> verified;
    for (double w : roots)
        if (std::abs(omega_constraint_residual(base, n, w)) < 1e-10) verified.push_back(w);
    return verified;
}

}  // namespace radspec
