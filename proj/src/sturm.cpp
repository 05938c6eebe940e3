#include "radspec/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace radspec {

namespace {

constexpr double kSafeMin = std::numeric_limits<double>::min();

// Gershgorin enclosure of the whole spectrum.
std::pair<double, double> spectrum_bounds(const std::vector<double>& diag,
                                          const std::vector<double>& off) {
    const std::size_t n = diag.size();
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i > 0 ? std::fabs(off[i - 1]) : 0.0;
        const double right = i + 1 < n ? std::fabs(off[i]) : 0.0;
        lo = std::min(lo, diag[i] - left - right);
        hi = std::max(hi, diag[i] + left + right);
    }
    const double pad = 1e-12 * (std::fabs(lo) + std::fabs(hi)) + kSafeMin;
    return {lo - pad, hi + pad};
}

double bisect_index(const std::vector<double>& diag, const std::vector<double>& off, int index,
                    double lo, double hi) {
    // eigenvalue with exactly `index` others strictly below it
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (sturm_count_below(diag, off, mid) >= index + 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() *
                           (std::fabs(lo) + std::fabs(hi)) +
                       kSafeMin)
            break;
    }
    return 0.5 * (lo + hi);
}

// LU of the (nearly singular) shifted tridiagonal with partial pivoting.
struct ShiftedLU {
    std::vector<double> d;      // pivots
    std::vector<double> sup;    // first superdiagonal of U
    std::vector<double> fill2;  // second superdiagonal (row-swap fill-in)
    std::vector<double> mult;   // L multipliers
    std::vector<bool> swap;

    ShiftedLU(const std::vector<double>& diag, const std::vector<double>& off, double shift) {
        const std::size_t n = diag.size();
        d.resize(n);
        sup.assign(n, 0.0);
        fill2.assign(n, 0.0);
        mult.assign(n, 0.0);
        swap.assign(n, false);
        for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
        for (std::size_t i = 0; i + 1 < n; ++i) sup[i] = off[i];

        for (std::size_t i = 0; i + 1 < n; ++i) {
            double sub = off[i];
            if (std::fabs(d[i]) >= std::fabs(sub)) {
                if (std::fabs(d[i]) < kSafeMin) d[i] = kSafeMin;
                const double m = sub / d[i];
                d[i + 1] -= m * sup[i];
                mult[i] = m;
            } else {
                // swap rows i and i+1
                const double m = d[i] / sub;
                d[i] = sub;
                const double old_sup_i = sup[i];
                sup[i] = d[i + 1];
                if (i + 2 < n) {
                    fill2[i] = sup[i + 1];
                    sup[i + 1] = -m * sup[i + 1];
                }
                d[i + 1] = old_sup_i - m * d[i + 1];
                mult[i] = m;
                swap[i] = true;
            }
        }
        if (std::fabs(d[n - 1]) < kSafeMin) d[n - 1] = kSafeMin;
    }

    void solve(std::vector<double>& x) const {
        const std::size_t n = d.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swap[i]) std::swap(x[i], x[i + 1]);
            x[i + 1] -= mult[i] * x[i];
        }
        x[n - 1] /= d[n - 1];
        if (n == 1) return;
        x[n - 2] = (x[n - 2] - sup[n - 2] * x[n - 1]) / d[n - 2];
        for (std::size_t i = n - 2; i-- > 0;)
            x[i] = (x[i] - sup[i] * x[i + 1] - fill2[i] * x[i + 2]) / d[i];
    }
};

}  // namespace

int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& off, double x) {
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const double esq = i > 0 ? off[i - 1] * off[i - 1] : 0.0;
        d = diag[i] - x - esq / d;
        if (std::fabs(d) < kSafeMin) d = -kSafeMin;  // pivot underflow guard
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<double> sturm_lowest_serial(const std::vector<double>& diag,
                                        const std::vector<double>& off, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > diag.size())
        throw std::invalid_argument("sturm_lowest: need 1 <= k <= n");
    const auto [lo, hi] = spectrum_bounds(diag, off);
    std::vector<double> w(static_cast<std::size_t>(k));
    for (int idx = 0; idx < k; ++idx)
        w[static_cast<std::size_t>(idx)] = bisect_index(diag, off, idx, lo, hi);
    return w;
}

std::vector<double> sturm_lowest(const std::vector<double>& diag, const std::vector<double>& off,
                                 int k) {
    if (k < 1 || static_cast<std::size_t>(k) > diag.size())
        throw std::invalid_argument("sturm_lowest: need 1 <= k <= n");
    const auto [lo, hi] = spectrum_bounds(diag, off);
    std::vector<double> w(static_cast<std::size_t>(k));
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < k; ++idx)
        w[static_cast<std::size_t>(idx)] = bisect_index(diag, off, idx, lo, hi);
    return w;
}

std::vector<double> tridiag_eigenvector(const std::vector<double>& diag,
                                        const std::vector<double>& off, double eigenvalue) {
    const std::size_t n = diag.size();
    const ShiftedLU lu(diag, off, eigenvalue);
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int it = 0; it < 4; ++it) {
        lu.solve(v);
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            v.assign(n, 0.0);
            v[n / 2] = 1.0;
            continue;
        }
        for (double& x : v) x /= norm;
    }
    return v;
}

}  // namespace radspec
