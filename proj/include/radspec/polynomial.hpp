#pragma once

#include <cstddef>
#include <vector>

namespace radspec {

// Dense real polynomial, coefficients ascending in degree.
struct Poly {
    std::vector<double> c;

    Poly() : c{0.0} {}
    explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {}
    static Poly constant(double v) { return Poly{{v}}; }

    std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
    double eval(double x) const;
    double eval_derivative(double x) const;
};

Poly operator+(const Poly& p, const Poly& q);
Poly operator*(const Poly& p, double s);

// p(x) * (c0 + c1 x)
Poly mul_linear(const Poly& p, double c0, double c1);

// All real roots of p, ascending.  Companion-matrix eigenvalues on the
// scale-balanced polynomial; roots with |Im| < imag_tol*(1+|root|) are kept
// and polished back onto the real axis with Newton.
std::vector<double> real_roots(const Poly& p, double imag_tol = 1e-8);

}  // namespace radspec
