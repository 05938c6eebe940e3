#include "radspec/frobenius.hpp"

#include "radspec/errors.hpp"
#include "radspec/polynomial.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace radspec {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

constexpr double kResidualTol = 1e-10;

}  // namespace

RecurrenceSeries recurrence_coefficients(double gamma, double a, double b, double w, int jmax) {
    require(gamma >= 0.0, "recurrence_coefficients: gamma must be >= 0");
    require(jmax >= 1, "recurrence_coefficients: jmax must be >= 1");
    RecurrenceSeries s{gamma, a, b, w, {}};
    s.coeffs.resize(static_cast<std::size_t>(jmax) + 1);
    s.coeffs[0] = 1.0;
    double c_prev = 0.0;  // c_{-1}
    double c_cur = 1.0;   // c_0
    for (int j = -1; j + 2 <= jmax; ++j) {
        const double den = (j + 2) * (2.0 * gamma + j + 2);
        const double c_next = (b * (2.0 * gamma + 2 * j + 3) - 2.0 * a) / (2.0 * den) * c_cur +
                              (4.0 * (2.0 * gamma + 2 * j + 2 - w) - b * b) / (4.0 * den) * c_prev;
        s.coeffs[static_cast<std::size_t>(j) + 2] = c_next;
        c_prev = c_cur;
        c_cur = c_next;
    }
    return s;
}

double truncation_w(double gamma, int n, double b) {
    require(gamma >= 0.0, "truncation_w: gamma must be >= 0");
    require(n >= 1, "truncation_w: the truncation index n starts at 1");
    return (8.0 * (gamma + n + 1) - b * b) / 4.0;
}

double truncation_residual(double gamma, double a, double b, double w, int n, double* dres_da) {
    require(n >= 1, "truncation_residual: n must be >= 1");
    double c_prev = 0.0, c_cur = 1.0;    // c_{-1}, c_0
    double d_prev = 0.0, d_cur = 0.0;    // their a-derivatives
    for (int j = -1; j + 2 <= n + 1; ++j) {
        const double den = (j + 2) * (2.0 * gamma + j + 2);
        const double lin = (b * (2.0 * gamma + 2 * j + 3) - 2.0 * a) / (2.0 * den);
        const double tail = (4.0 * (2.0 * gamma + 2 * j + 2 - w) - b * b) / (4.0 * den);
        const double c_next = lin * c_cur + tail * c_prev;
        const double d_next = lin * d_cur - c_cur / den + tail * d_prev;
        c_prev = c_cur;
        c_cur = c_next;
        d_prev = d_cur;
        d_cur = d_next;
    }
    if (dres_da) *dres_da = d_cur;
    return c_cur;
}

namespace {

// c_{n+1} as a polynomial in a, recurrence run with dense polynomial
// coefficients at fixed b and w.
Poly cnp1_poly_in_a(double gamma, int n, double b, double w) {
    Poly c_prev = Poly::constant(0.0);
    Poly c_cur = Poly::constant(1.0);
    for (int j = -1; j + 2 <= n + 1; ++j) {
        const double den = (j + 2) * (2.0 * gamma + j + 2);
        Poly next = mul_linear(c_cur, b * (2.0 * gamma + 2 * j + 3) / (2.0 * den), -1.0 / den);
        next = next + c_prev * ((4.0 * (2.0 * gamma + 2 * j + 2 - w) - b * b) / (4.0 * den));
        c_prev = std::move(c_cur);
        c_cur = std::move(next);
    }
    return c_cur;
}

// Same in b.  With w = truncation_w(gamma, n, b) substituted, the c_j
// coefficient 4(2g+2j+2-w) - b^2 collapses to 8(j-n): b enters only linearly
// per step and c_{n+1} is a degree-(n+1) polynomial in b.
Poly cnp1_poly_in_b(double gamma, int n, double a) {
    Poly c_prev = Poly::constant(0.0);
    Poly c_cur = Poly::constant(1.0);
    for (int j = -1; j + 2 <= n + 1; ++j) {
        const double den = (j + 2) * (2.0 * gamma + j + 2);
        Poly next = mul_linear(c_cur, -a / den, (2.0 * gamma + 2 * j + 3) / (2.0 * den));
        next = next + c_prev * (2.0 * (j - n) / den);
        c_prev = std::move(c_cur);
        c_cur = std::move(next);
    }
    return c_cur;
}

double polish_a_root(double gamma, int n, double b, double w, double a) {
    for (int it = 0; it < 24; ++it) {
        double deriv = 0.0;
        const double res = truncation_residual(gamma, a, b, w, n, &deriv);
        if (deriv == 0.0) break;
        const double step = res / deriv;
        a -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(a))) break;
    }
    return a;
}

}  // namespace

TruncationSolution truncation_a_roots(double gamma, int n, double b) {
    require(gamma >= 0.0, "truncation_a_roots: gamma must be >= 0");
    require(n >= 1, "truncation_a_roots: the truncation index n starts at 1");
    const double w = truncation_w(gamma, n, b);
    const Poly poly = cnp1_poly_in_a(gamma, n, b, w);
    std::vector<double> roots = real_roots(poly);
    for (double& r : roots) r = polish_a_root(gamma, n, b, w, r);

    if (static_cast<int>(roots.size()) != n + 1) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "truncation_a_roots(gamma=%g, n=%d, b=%g): found %zu real roots, expected %d",
                      gamma, n, b, roots.size(), n + 1);
        throw RootCountMismatch(msg);
    }
    for (double r : roots) {
        if (std::abs(truncation_residual(gamma, r, b, w, n)) >= kResidualTol) {
            char msg[160];
            std::snprintf(msg, sizeof msg,
                          "truncation_a_roots(gamma=%g, n=%d, b=%g): root %.17g failed the residual check",
                          gamma, n, b, r);
            throw RootCountMismatch(msg);
        }
    }
    return TruncationSolution{gamma, n, b, w, std::move(roots)};
}

std::vector<double> truncation_b_roots(double gamma, int n, double a) {
    require(gamma >= 0.0, "truncation_b_roots: gamma must be >= 0");
    require(n >= 1, "truncation_b_roots: the truncation index n starts at 1");
    const Poly poly = cnp1_poly_in_b(gamma, n, a);
    std::vector<double> roots = real_roots(poly);
    for (double& b : roots) {
        // polish in b with w(b) re-substituted each step; derivative by secant
        for (int it = 0; it < 24; ++it) {
            const double w = truncation_w(gamma, n, b);
            const double res = truncation_residual(gamma, a, b, w, n);
            const double h = 1e-7 * (1.0 + std::abs(b));
            const double res2 =
                truncation_residual(gamma, a, b + h, truncation_w(gamma, n, b + h), n);
            const double deriv = (res2 - res) / h;
            if (deriv == 0.0) break;
            const double step = res / deriv;
            b -= step;
            if (std::abs(step) <= 1e-15 * (1.0 + std::abs(b))) break;
        }
    }
    // the count is not asserted here; return whatever real roots exist
    return roots;
}

std::pair<double, double> closed_form_n1(double gamma, double b) {
    require(gamma >= 0.0, "closed_form_n1: gamma must be >= 0");
    const double disc = std::sqrt(b * b + 8.0 * (2.0 * gamma + 1.0));
    return {(2.0 * b * (gamma + 1.0) - disc) / 2.0, (2.0 * b * (gamma + 1.0) + disc) / 2.0};
}

double cubic_n2_residual(double gamma, double a, double b) {
    require(gamma >= 0.0, "cubic_n2_residual: gamma must be >= 0");
    const double g = gamma;
    return 4.0 * a * a * a - 6.0 * a * a * b * (2.0 * g + 3.0) +
           a * (b * b * (12.0 * g * g + 36.0 * g + 23.0) - 16.0 * (4.0 * g + 3.0)) -
           b * (2.0 * g + 1.0) *
               (b * b * (2.0 * g + 3.0) * (2.0 * g + 5.0) - 16.0 * (4.0 * g + 7.0)) / 2.0;
}

double polynomial_wavefunction(const RecurrenceSeries& series, int n, double xi) {
    require(n >= 0, "polynomial_wavefunction: n must be >= 0");
    require(xi >= 0.0, "polynomial_wavefunction: xi must be >= 0");
    if (static_cast<std::size_t>(n) >= series.coeffs.size())
        throw std::invalid_argument("polynomial_wavefunction: series shorter than degree n");
    for (std::size_t j = static_cast<std::size_t>(n) + 1; j < series.coeffs.size(); ++j) {
        if (std::abs(series.coeffs[j]) >= 1e-10) {
            char msg[128];
            std::snprintf(msg, sizeof msg, "polynomial_wavefunction: c_%zu = %.3e does not vanish",
                          j, series.coeffs[j]);
            throw NotTruncated(msg);
        }
    }
    double p = 0.0;
    for (int j = n; j >= 0; --j) p = p * xi + series.coeffs[static_cast<std::size_t>(j)];
    const double prefactor = (xi == 0.0 && series.gamma == 0.0)
                                 ? 1.0
                                 : std::pow(xi, series.gamma);
    return prefactor * std::exp(-series.b * xi / 2.0 - xi * xi / 2.0) * p;
}

}  // namespace radspec
