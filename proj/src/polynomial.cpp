#include "radspec/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

namespace radspec {

double Poly::eval(double x) const {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
}

double Poly::eval_derivative(double x) const {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) v = v * x + c[k] * static_cast<double>(k);
    return v;
}

Poly operator+(const Poly& p, const Poly& q) {
    Poly r;
    r.c.assign(std::max(p.c.size(), q.c.size()), 0.0);
    for (std::size_t k = 0; k < p.c.size(); ++k) r.c[k] += p.c[k];
    for (std::size_t k = 0; k < q.c.size(); ++k) r.c[k] += q.c[k];
    return r;
}

Poly operator*(const Poly& p, double s) {
    Poly r = p;
    for (double& v : r.c) v *= s;
    return r;
}

Poly mul_linear(const Poly& p, double c0, double c1) {
    Poly r;
    r.c.assign(p.c.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.c.size(); ++k) {
        r.c[k] += c0 * p.c[k];
        r.c[k + 1] += c1 * p.c[k];
    }
    return r;
}

std::vector<double> real_roots(const Poly& p, double imag_tol) {
    // strip trailing zero coefficients
    std::size_t deg = p.c.size();
    while (deg > 1 && p.c[deg - 1] == 0.0) --deg;
    if (deg <= 1) return {};  // constant: no roots (zero poly treated the same)
    const std::size_t n = deg - 1;
    if (n == 1) return {-p.c[0] / p.c[1]};

    // variable scaling x = s*y balances coefficient magnitudes before the
    // (unbalanced) companion eigensolve
    double s = std::pow(std::abs(p.c[0] / p.c[n]), 1.0 / static_cast<double>(n));
    if (!(s > 0.0) || !std::isfinite(s)) s = 1.0;

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<int>(n), static_cast<int>(n));
    // monic coefficients of q(y) = p(s*y) / (c_n s^n)
    std::vector<double> monic(n);
    double sk = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        monic[k] = p.c[k] * sk / p.c[n];
        sk *= s;
    }
    const double s_n = sk;  // s^n
    for (std::size_t k = 0; k < n; ++k) {
        companion(static_cast<int>(k), static_cast<int>(n) - 1) = -monic[k] / s_n;
        if (k + 1 < n) companion(static_cast<int>(k) + 1, static_cast<int>(k)) = 1.0;
    }

    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    std::vector<double> roots;
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
        std::complex<double> z = es.eigenvalues()[k] * s;
        if (std::abs(z.imag()) >= imag_tol * (1.0 + std::abs(z))) continue;
        double x = z.real();
        // Newton polish on the original polynomial
        for (int it = 0; it < 32; ++it) {
            double f = p.eval(x);
            double df = p.eval_derivative(x);
            if (df == 0.0) break;
            double step = f / df;
            x -= step;
            if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
        }
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace radspec
