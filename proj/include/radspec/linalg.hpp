#pragma once

#include "radspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <numeric>
#include <vector>

namespace radspec {

// Row-major square matrix, templated so the same factorizations run in
// double and in the extended-precision scalar.
template <typename Real>
struct SquareMatrix {
    std::size_t n = 0;
    std::vector<Real> data;

    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size) : n(size), data(size * size, Real(0)) {}

    Real& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
    const Real& operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

// In-place lower Cholesky S = L L^T.  Throws IllConditionedOverlap when a
// pivot is not strictly positive at working precision.
template <typename Real>
SquareMatrix<Real> cholesky(const SquareMatrix<Real>& s) {
    using std::sqrt;
    const std::size_t n = s.n;
    SquareMatrix<Real> L(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Real sum = s(i, j);
            for (std::size_t k = 0; k < j; ++k) sum -= L(i, k) * L(j, k);
            if (i == j) {
                if (!(sum > Real(0))) {
                    char msg[160];
                    std::snprintf(msg, sizeof msg,
                                  "cholesky: pivot %zu of the overlap matrix is not positive at "
                                  "working precision; reduce the basis size or use the "
                                  "extended-precision mode",
                                  i);
                    throw IllConditionedOverlap(msg);
                }
                L(i, i) = sqrt(sum);
            } else {
                L(i, j) = sum / L(j, j);
            }
        }
    }
    return L;
}

// Solve L y = rhs (lower triangular), in place.
template <typename Real>
void forward_solve(const SquareMatrix<Real>& L, std::vector<Real>& rhs) {
    const std::size_t n = L.n;
    for (std::size_t i = 0; i < n; ++i) {
        Real sum = rhs[i];
        for (std::size_t k = 0; k < i; ++k) sum -= L(i, k) * rhs[k];
        rhs[i] = sum / L(i, i);
    }
}

// Solve L^T x = rhs, in place.
template <typename Real>
void backward_solve_transposed(const SquareMatrix<Real>& L, std::vector<Real>& rhs) {
    const std::size_t n = L.n;
    for (std::size_t i = n; i-- > 0;) {
        Real sum = rhs[i];
        for (std::size_t k = i + 1; k < n; ++k) sum -= L(k, i) * rhs[k];
        rhs[i] = sum / L(i, i);
    }
}

// Cyclic Jacobi eigensolve of a symmetric matrix.  Eigenvalues ascending,
// eigenvectors as columns of V (orthonormal).  Plain and slow-ish but exact
// at any scalar precision, which is what the ill-conditioned Gram path needs.
template <typename Real>
void jacobi_eigensolve(SquareMatrix<Real> a, std::vector<Real>& eigenvalues,
                       SquareMatrix<Real>& v) {
    using std::fabs;
    using std::sqrt;
    const std::size_t n = a.n;
    v = SquareMatrix<Real>(n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = Real(1);

    const Real eps = std::numeric_limits<Real>::epsilon();
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Real off = Real(0), diag = Real(0);
        for (std::size_t p = 0; p < n; ++p) {
            diag += fabs(a(p, p));
            for (std::size_t q = p + 1; q < n; ++q) off += fabs(a(p, q));
        }
        if (off <= eps * (diag + off)) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Real apq = a(p, q);
                if (fabs(apq) <= eps * (fabs(a(p, p)) + fabs(a(q, q))) * Real(0.5)) continue;
                const Real theta = (a(q, q) - a(p, p)) / (Real(2) * apq);
                Real t = Real(1) / (fabs(theta) + sqrt(theta * theta + Real(1)));
                if (theta < Real(0)) t = -t;
                const Real c = Real(1) / sqrt(t * t + Real(1));
                const Real s = t * c;
                const Real tau = s / (Real(1) + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = Real(0);
                a(q, p) = Real(0);
                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const Real arp = a(r, p), arq = a(r, q);
                        a(r, p) = arp - s * (arq + tau * arp);
                        a(p, r) = a(r, p);
                        a(r, q) = arq + s * (arp - tau * arq);
                        a(q, r) = a(r, q);
                    }
                    const Real vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    // sort ascending, carrying columns
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
    eigenvalues.resize(n);
    SquareMatrix<Real> sorted(n);
    for (std::size_t k = 0; k < n; ++k) {
        eigenvalues[k] = a(order[k], order[k]);
        for (std::size_t r = 0; r < n; ++r) sorted(r, k) = v(r, order[k]);
    }
    v = std::move(sorted);
}

// Generalized symmetric-definite solve H x = w S x by congruence:
// S = L L^T, C = L^-1 H L^-T, C y = w y, x = L^-T y.  Vectors come back
// S-orthonormal (x^T S x = 1).
template <typename Real>
void generalized_eigensolve(const SquareMatrix<Real>& h, const SquareMatrix<Real>& s,
                            std::vector<Real>& eigenvalues, SquareMatrix<Real>& vectors) {
    const std::size_t n = h.n;
    const SquareMatrix<Real> L = cholesky(s);

    // C = L^-1 H L^-T, built column by column
    SquareMatrix<Real> c(n);
    std::vector<Real> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) col[i] = h(i, j);
        forward_solve(L, col);
        for (std::size_t i = 0; i < n; ++i) c(i, j) = col[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) col[j] = c(i, j);
        forward_solve(L, col);
        for (std::size_t j = 0; j < n; ++j) c(i, j) = col[j];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Real m = (c(i, j) + c(j, i)) / Real(2);
            c(i, j) = m;
            c(j, i) = m;
        }

    SquareMatrix<Real> y;
    jacobi_eigensolve(std::move(c), eigenvalues, y);

    vectors = SquareMatrix<Real>(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) col[i] = y(i, k);
        backward_solve_transposed(L, col);
        for (std::size_t i = 0; i < n; ++i) vectors(i, k) = col[i];
    }
}

}  // namespace radspec
