#include "radspec/variational.hpp"

#include "radspec/bigfloat.hpp"
#include "radspec/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace radspec {

namespace detail {
struct ExtendedVectors {
    double gamma = 0.0;
    double scale = 1.0;
    int size = 0;
    std::vector<BigFloat> eigenvalues;            // full-precision copies
    std::vector<std::vector<BigFloat>> columns;   // one per computed state
    std::vector<BigFloat> moments;                // moments[k] = integral xi^{2g+k} e^{-beta xi^2}
};
}  // namespace detail

namespace {

template <typename Real>
Real real_tgamma(const Real& x) {
    return boost::math::tgamma(x);
}
template <>
double real_tgamma<double>(const double& x) {
    return std::tgamma(x);
}

// moments[k] = integral_0^inf xi^{2 gamma + k} e^{-beta xi^2} dxi, k = 0..kmax.
// Two Gamma seeds, the rest by Gamma(z+1) = z Gamma(z).
template <typename Real>
std::vector<Real> moment_table(Real gamma, Real beta, int kmax) {
    using std::pow;
    std::vector<Real> m(static_cast<std::size_t>(kmax) + 1);
    m[0] = real_tgamma<Real>(gamma + Real(0.5)) / (Real(2) * pow(beta, gamma + Real(0.5)));
    if (kmax >= 1) m[1] = real_tgamma<Real>(gamma + Real(1)) / (Real(2) * pow(beta, gamma + Real(1)));
    for (int k = 0; k + 2 <= kmax; ++k)
        m[static_cast<std::size_t>(k) + 2] =
            m[static_cast<std::size_t>(k)] * (Real(2) * gamma + k + 1) / (Real(2) * beta);
    return m;
}

template <typename Real>
struct Assembled {
    SquareMatrix<Real> s;
    SquareMatrix<Real> h;
    Real max_asymmetry;
    std::vector<Real> moments;
};

// L u_j with u_j = xi^p e^{-beta xi^2/2}, p = gamma+j:
//   L u_j = [(g^2-p^2) xi^{p-2} + 2 beta (p+1) xi^p + (1-beta^2) xi^{p+2}
//            - a xi^{p-1} + b xi^{p+1}] e^{-beta xi^2/2},
// so every entry of H is a linear combination of the moment table.  The
// xi^{p-2} coefficient vanishes identically for j = 0, which keeps the
// divergent gamma = 0 moment out of the sum.
template <typename Real>
Assembled<Real> assemble(Real gamma, Real a, Real b, int n, Real beta) {
    using std::fabs;
    std::vector<Real> mom = moment_table(gamma, beta, 2 * n + 3);
    Assembled<Real> out{SquareMatrix<Real>(static_cast<std::size_t>(n)),
                        SquareMatrix<Real>(static_cast<std::size_t>(n)), Real(0), {}};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t k = static_cast<std::size_t>(i + j);
            out.s(i, j) = mom[k + 1];
            const Real p = gamma + j;
            Real h = Real(2) * beta * (p + 1) * mom[k + 1] +
                     (Real(1) - beta * beta) * mom[k + 3] - a * mom[k] + b * mom[k + 2];
            if (j > 0) h += (gamma * gamma - p * p) * mom[k - 1];
            out.h(i, j) = h;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Real asym = fabs(out.h(i, j) - out.h(j, i)) / (Real(1) + fabs(out.h(i, j)));
            if (asym > out.max_asymmetry) out.max_asymmetry = asym;
            const Real m = (out.h(i, j) + out.h(j, i)) / Real(2);
            out.h(i, j) = m;
            out.h(j, i) = m;
        }
    out.moments = std::move(mom);
    return out;
}

void check_preconditions(const ReducedParams& params, int count, const BasisSpec& basis) {
    if (!(basis.gamma == params.gamma))
        throw std::invalid_argument("spectrum: basis.gamma must equal params.gamma");
    if (!(params.gamma >= 0.0)) throw std::invalid_argument("spectrum: gamma must be >= 0");
    if (basis.size < 1) throw std::invalid_argument("spectrum: basis size must be >= 1");
    if (!(basis.scale > 0.0)) throw std::invalid_argument("spectrum: basis scale must be > 0");
    if (count < 1 || count > basis.size)
        throw std::invalid_argument("spectrum: need 1 <= count <= basis size");
}

// deterministic sign: the largest-magnitude component (first on ties) is positive
template <typename Real>
void fix_sign(std::vector<Real>& v) {
    using std::fabs;
    std::size_t imax = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (fabs(v[i]) > fabs(v[imax])) imax = i;
    if (v[imax] < Real(0))
        for (Real& x : v) x = -x;
}

SpectralResult solve_once(const ReducedParams& params, int count, const BasisSpec& basis,
                          PrecisionMode mode) {
    SpectralResult res;
    res.params = params;
    res.basis = basis;
    res.mode = mode;
    res.converged_digits = std::numeric_limits<double>::quiet_NaN();

    if (mode == PrecisionMode::double_precision) {
        Assembled<double> m = assemble<double>(params.gamma, params.a, params.b, basis.size,
                                               basis.scale);
        std::vector<double> ev;
        SquareMatrix<double> vec;
        generalized_eigensolve(m.h, m.s, ev, vec);
        for (int k = 0; k < count; ++k) {
            res.eigenvalues.push_back(ev[static_cast<std::size_t>(k)]);
            std::vector<double> col(static_cast<std::size_t>(basis.size));
            for (int i = 0; i < basis.size; ++i)
                col[static_cast<std::size_t>(i)] = vec(static_cast<std::size_t>(i),
                                                       static_cast<std::size_t>(k));
            fix_sign(col);
            res.vectors.push_back(std::move(col));
        }
    } else {
        Assembled<BigFloat> m = assemble<BigFloat>(BigFloat(params.gamma), BigFloat(params.a),
                                                   BigFloat(params.b), basis.size,
                                                   BigFloat(basis.scale));
        std::vector<BigFloat> ev;
        SquareMatrix<BigFloat> vec;
        generalized_eigensolve(m.h, m.s, ev, vec);
        auto big = std::make_shared<detail::ExtendedVectors>();
        big->gamma = basis.gamma;
        big->scale = basis.scale;
        big->size = basis.size;
        big->moments = std::move(m.moments);
        for (int k = 0; k < count; ++k) {
            res.eigenvalues.push_back(static_cast<double>(ev[static_cast<std::size_t>(k)]));
            big->eigenvalues.push_back(ev[static_cast<std::size_t>(k)]);
            std::vector<BigFloat> col(static_cast<std::size_t>(basis.size));
            for (int i = 0; i < basis.size; ++i)
                col[static_cast<std::size_t>(i)] = vec(static_cast<std::size_t>(i),
                                                       static_cast<std::size_t>(k));
            fix_sign(col);
            std::vector<double> dcol(col.size());
            for (std::size_t i = 0; i < col.size(); ++i) dcol[i] = static_cast<double>(col[i]);
            big->columns.push_back(std::move(col));
            res.vectors.push_back(std::move(dcol));
        }
        res.big = std::move(big);
    }
    return res;
}

}  // namespace

double overlap_element(double gamma, int i, int j, double scale) {
    if (i < 0 || j < 0) throw std::invalid_argument("overlap_element: indices must be >= 0");
    if (!(scale > 0.0)) throw std::invalid_argument("overlap_element: scale must be > 0");
    const double e = gamma + (i + j) / 2.0 + 1.0;
    return std::tgamma(e) / (2.0 * std::pow(scale, e));
}

MatrixPair operator_matrix(const ReducedParams& params, const BasisSpec& basis) {
    if (!(basis.gamma == params.gamma))
        throw std::invalid_argument("operator_matrix: basis.gamma must equal params.gamma");
    Assembled<double> m =
        assemble<double>(params.gamma, params.a, params.b, basis.size, basis.scale);
    return MatrixPair{std::move(m.s), std::move(m.h), m.max_asymmetry};
}

SpectralResult spectrum(const ReducedParams& params, int count, const BasisSpec& basis,
                        PrecisionMode mode, bool estimate_convergence) {
    check_preconditions(params, count, basis);
    SpectralResult res = solve_once(params, count, basis, mode);
    for (std::size_t k = 0; k + 1 < res.eigenvalues.size(); ++k)
        if (!(res.eigenvalues[k] < res.eigenvalues[k + 1]))
            throw std::runtime_error("spectrum: eigenvalues failed to order strictly");
    if (estimate_convergence && basis.size - 2 >= count) {
        BasisSpec smaller = basis;
        smaller.size -= 2;
        const SpectralResult ref = solve_once(params, count, smaller, mode);
        double rel = 0.0;
        for (int k = 0; k < count; ++k) {
            const double d = std::fabs(res.eigenvalues[static_cast<std::size_t>(k)] -
                                       ref.eigenvalues[static_cast<std::size_t>(k)]) /
                             (1.0 + std::fabs(res.eigenvalues[static_cast<std::size_t>(k)]));
            rel = std::max(rel, d);
        }
        res.converged_digits = -std::log10(std::max(rel, 1e-30));
    }
    return res;
}

namespace {

// v^T M v with M_ij = moments[i+j+offset]; extended vectors when present,
// since the raw-basis coefficients can be large with heavy cancellation.
double quadratic_form(const SpectralResult& result, int nu, int offset) {
    if (nu < 0 || static_cast<std::size_t>(nu) >= result.vectors.size())
        throw std::invalid_argument("expectation: state index out of range");
    const int n = result.basis.size;
    if (result.big) {
        const auto& v = result.big->columns[static_cast<std::size_t>(nu)];
        const auto& mom = result.big->moments;
        BigFloat acc(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                acc += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] *
                       mom[static_cast<std::size_t>(i + j + offset)];
        return static_cast<double>(acc);
    }
    const auto& v = result.vectors[static_cast<std::size_t>(nu)];
    const std::vector<double> mom =
        moment_table<double>(result.basis.gamma, result.basis.scale, 2 * n + 3);
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            acc += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] *
                   mom[static_cast<std::size_t>(i + j + offset)];
    return acc;
}

}  // namespace

double expectation_xi(const SpectralResult& result, int nu) {
    return quadratic_form(result, nu, 2);
}

double expectation_inv_xi(const SpectralResult& result, int nu) {
    return quadratic_form(result, nu, 0);
}

std::string eigenvalue_string(const SpectralResult& result, int nu, int digits) {
    if (nu < 0 || static_cast<std::size_t>(nu) >= result.eigenvalues.size())
        throw std::invalid_argument("eigenvalue_string: state index out of range");
    if (result.big) {
        std::ostringstream os;
        os << std::setprecision(digits)
           << result.big->eigenvalues[static_cast<std::size_t>(nu)];
        return os.str();
    }
    std::ostringstream os;
    os << std::setprecision(17) << result.eigenvalues[static_cast<std::size_t>(nu)];
    return os.str();
}

double wavefunction_eval(const SpectralResult& result, int nu, double xi) {
    if (nu < 0 || static_cast<std::size_t>(nu) >= result.vectors.size())
        throw std::invalid_argument("wavefunction_eval: state index out of range");
    if (!(xi >= 0.0)) throw std::invalid_argument("wavefunction_eval: xi must be >= 0");
    const double g = result.basis.gamma;
    const int n = result.basis.size;
    if (result.big) {
        const auto& v = result.big->columns[static_cast<std::size_t>(nu)];
        BigFloat poly(0);
        for (int j = n; j-- > 0;) poly = poly * xi + v[static_cast<std::size_t>(j)];
        const double pref = (xi == 0.0 && g == 0.0) ? 1.0 : std::pow(xi, g);
        return pref * static_cast<double>(poly) *
               std::exp(-result.basis.scale * xi * xi / 2.0);
    }
    const auto& v = result.vectors[static_cast<std::size_t>(nu)];
    double poly = 0.0;
    for (int j = n; j-- > 0;) poly = poly * xi + v[static_cast<std::size_t>(j)];
    const double pref = (xi == 0.0 && g == 0.0) ? 1.0 : std::pow(xi, g);
    return pref * poly * std::exp(-result.basis.scale * xi * xi / 2.0);
}

}  // namespace radspec
