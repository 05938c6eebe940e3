#include "radspec/verification.hpp"

#include "radspec/frobenius.hpp"
#include "radspec/model.hpp"
#include "radspec/oracle.hpp"
#include "radspec/reference_data.hpp"
#include "radspec/variational.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

namespace radspec {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
    CheckResult res;
    res.name = name;
    const auto t0 = Clock::now();
    try {
        auto [pass, detail] = f();
        res.pass = pass;
        res.detail = std::move(detail);
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

std::string fmt(const char* format, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

}  // namespace

CheckResult check_truncation_roots() {
    return timed("truncation roots n=2, b=1", []() -> std::pair<bool, std::string> {
        const TruncationSolution sol = truncation_a_roots(0.0, 2, 1.0);
        double dev = std::fabs(sol.w - reference::kTruncationN2B1W);
        if (sol.a_roots.size() != reference::kTruncationN2B1Roots.size())
            return {false, "wrong root count"};
        for (std::size_t i = 0; i < sol.a_roots.size(); ++i)
            dev = std::max(dev, std::fabs(sol.a_roots[i] - reference::kTruncationN2B1Roots[i]));
        return {dev < 1e-8, "max deviation " + fmt("%.2e", dev) + " (tol 1e-8)"};
    });
}

CheckResult check_closed_forms() {
    return timed("closed forms n=1 / cubic n=2", []() -> std::pair<bool, std::string> {
        double dev1 = 0.0;
        for (double gamma : {0.0, 0.5, 1.0, 2.0}) {
            for (double b : {-3.0, -1.0, 0.0, 1.0, 3.0}) {
                const auto [lo, hi] = closed_form_n1(gamma, b);
                const TruncationSolution sol = truncation_a_roots(gamma, 1, b);
                dev1 = std::max(dev1, std::fabs(sol.a_roots[0] - lo));
                dev1 = std::max(dev1, std::fabs(sol.a_roots[1] - hi));
            }
        }
        double dev2 = 0.0;
        for (double gamma : {0.0, 0.5, 1.0, 2.0}) {
            for (double b : {-2.0, 0.0, 1.0, 2.5}) {
                const TruncationSolution sol = truncation_a_roots(gamma, 2, b);
                for (double r : sol.a_roots) {
                    const double scaled = std::fabs(cubic_n2_residual(gamma, r, b)) /
                                          (1.0 + std::fabs(r * r * r));
                    dev2 = std::max(dev2, scaled);
                }
            }
        }
        const bool pass = dev1 < 1e-12 && dev2 < 1e-6;
        return {pass, "n=1 dev " + fmt("%.2e", dev1) + " (tol 1e-12), cubic " + fmt("%.2e", dev2) +
                          " (tol 1e-6)"};
    });
}

CheckResult check_oscillator_exact() {
    return timed("oscillator limit a=b=0", []() -> std::pair<bool, std::string> {
        double dev_var = 0.0;
        for (double gamma : {0.0, 1.0}) {
            const ReducedParams params{gamma, 0.0, 0.0};
            const BasisSpec basis{gamma, 12, 1.0};
            const SpectralResult res =
                spectrum(params, 3, basis, PrecisionMode::double_precision, false);
            for (int nu = 0; nu < 3; ++nu)
                dev_var = std::max(dev_var, std::fabs(res.eigenvalues[static_cast<std::size_t>(
                                                nu)] -
                                            (4.0 * nu + 2.0 * gamma + 2.0)));
        }
        return {dev_var < 1e-8, "max deviation " + fmt("%.2e", dev_var) + " (tol 1e-8)"};
    });
}

CheckResult check_paper_spectra() {
    return timed("reference spectra (4 lists)", []() -> std::pair<bool, std::string> {
        const auto t0 = Clock::now();
        double dev = 0.0;
        for (const auto& ref : reference::kSpectrumCases) {
            const ReducedParams params{0.0, ref.a, ref.b};
            const BasisSpec basis{0.0, 32, 1.0};
            const SpectralResult res = spectrum(params, ref.count, basis, PrecisionMode::extended);
            for (int k = 0; k < ref.count; ++k)
                dev = std::max(dev, std::fabs(res.eigenvalues[static_cast<std::size_t>(k)] -
                                              ref.w[static_cast<std::size_t>(k)]));
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool pass = dev < 1e-6 && secs < 30.0;
        return {pass, "max deviation " + fmt("%.2e", dev) + " (tol 1e-6), " + fmt("%.1f", secs) +
                          " s (budget 30)"};
    });
}

CheckResult check_truncation_on_curves() {
    return timed("termination points on eigencurves n<=8", []() -> std::pair<bool, std::string> {
        double dev = 0.0;
        double dev_line = 0.0;
        for (int n = 1; n <= 8; ++n) {
            const TruncationSolution sol = truncation_a_roots(0.0, n, 1.0);
            const double w_expected = (8.0 * (n + 1) - 1.0) / 4.0;
            for (std::size_t i = 0; i < sol.a_roots.size(); ++i) {
                const ReducedParams params{0.0, sol.a_roots[i], 1.0};
                const BasisSpec basis{0.0, 34, 1.0};
                const SpectralResult res = spectrum(params, static_cast<int>(i) + 1, basis,
                                                    PrecisionMode::extended, false);
                dev = std::max(dev, std::fabs(res.eigenvalues[i] - w_expected));
                if (n == 8) dev_line = std::max(dev_line, std::fabs(sol.w - 17.75));
            }
        }
        const bool pass = dev < 1e-7 && dev_line == 0.0;
        return {pass, "max curve deviation " + fmt("%.2e", dev) +
                          " (tol 1e-7), n=8 line offset " + fmt("%.1e", dev_line)};
    });
}

CheckResult check_hellmann_feynman_grid() {
    return timed("Hellmann-Feynman grid", []() -> std::pair<bool, std::string> {
        double worst = 0.0;
        for (double gamma : {0.0, 1.0}) {
            for (double a : {-1.0, 0.0, 2.0}) {
                for (double b : {0.0, 1.0}) {
                    for (int nu : {0, 1}) {
                        const ReducedParams params{gamma, a, b};
                        const auto [res_a, res_b] = hf_residuals(params, nu);
                        worst = std::max(worst, std::max(res_a, res_b));
                    }
                }
            }
        }
        // monotonicity: W decreasing in a, increasing in b (central differences)
        bool signs_ok = true;
        for (double gamma : {0.0, 1.0}) {
            const BasisSpec basis{gamma, 24, 1.0};
            for (int nu : {0, 1}) {
                const double h = 1e-3;
                auto w_of = [&](double a, double b) {
                    return spectrum(ReducedParams{gamma, a, b}, nu + 1, basis,
                                    PrecisionMode::extended, false)
                        .eigenvalues[static_cast<std::size_t>(nu)];
                };
                if (!(w_of(1.0 + h, 0.5) < w_of(1.0 - h, 0.5))) signs_ok = false;
                if (!(w_of(1.0, 0.5 + h) > w_of(1.0, 0.5 - h))) signs_ok = false;
            }
        }
        const bool pass = worst < 1e-5 && signs_ok;
        return {pass, "worst residual " + fmt("%.2e", worst) + " (tol 1e-5), signs " +
                          (signs_ok ? "ok" : "WRONG")};
    });
}

CheckResult check_asymptotes() {
    return timed("hydrogenic asymptote", []() -> std::pair<bool, std::string> {
        const auto t0 = Clock::now();
        const double d1 = asymptotic_check(0.0, 0, 20.0, 1.0);
        const double s1 = std::chrono::duration<double>(Clock::now() - t0).count();
        const auto t1 = Clock::now();
        const double d2 = asymptotic_check(0.0, 1, 50.0, 1.0);
        const double s2 = std::chrono::duration<double>(Clock::now() - t1).count();
        const bool pass = d1 < 5e-3 && d2 < 5e-3 && s1 < 10.0 && s2 < 10.0;
        return {pass, "deviations " + fmt("%.2e", d1) + ", " + fmt("%.2e", d2) +
                          " (tol 5e-3); " + fmt("%.1f", s1) + " s / " + fmt("%.1f", s2) +
                          " s (budget 10 each)"};
    });
}

CheckResult check_oracle_equivalence() {
    return timed("variational vs finite-difference", []() -> std::pair<bool, std::string> {
        const ReducedParams triples[] = {{0.0, 2.0, 1.0}, {0.5, -1.0, 2.0}, {0.3, 1.0, -1.0},
                                         {1.0, 3.0, 0.0}, {2.0, -2.0, 0.5}, {1.5, -0.5, -1.0}};
        double dev = 0.0;
        for (const auto& params : triples) dev = std::max(dev, crosscheck(params, 4));
        // exact oscillator case, oracle alone against 4 nu + 2 gamma + 2
        double dev_exact = 0.0;
        for (double gamma : {0.0, 0.5, 1.0}) {
            const ReducedParams params{gamma, 0.0, 0.0};
            const OracleResult res = fd_spectrum_auto(params, 3);
            for (int nu = 0; nu < 3; ++nu)
                dev_exact = std::max(
                    dev_exact, std::fabs(res.richardson_estimate[static_cast<std::size_t>(nu)] -
                                         (4.0 * nu + 2.0 * gamma + 2.0)));
        }
        const bool pass = dev < 1e-6 && dev_exact < 1e-7;
        return {pass, "crosscheck " + fmt("%.2e", dev) + " (tol 1e-6), exact case " +
                          fmt("%.2e", dev_exact) + " (tol 1e-7)"};
    });
}

CheckResult check_refutation_demo() {
    return timed("allowed-frequency refutation", []() -> std::pair<bool, std::string> {
        const PhysicalParams base =
            PhysicalParams::with_coupling(1.0, 1.0, 8.0, 0.0, 0.0, 0, SpinLabel::up);
        const std::vector<double> roots = allowed_omega_scan(base, 1, 0.1, 10.0);
        if (roots.size() != 1) return {false, "expected exactly one root in (0.1, 10)"};
        const double omega = roots.front();
        const double residual = std::fabs(omega_constraint_residual(base, 1, omega));
        if (std::fabs(omega - 1.490) > 5e-3)
            return {false, "root " + fmt("%.6f", omega) + " not near 1.490"};
        if (!(residual < 1e-10)) return {false, "residual " + fmt("%.2e", residual)};

        // bound states persist off the constraint: spectrum at 1.05 omega
        PhysicalParams off = base;
        off.omega = 1.05 * omega;
        const ReducedParams params = reduce(off);
        const BasisSpec basis{params.gamma, 28, 1.0};
        const SpectralResult res = spectrum(params, 3, basis, PrecisionMode::extended, false);
        bool increasing = res.eigenvalues.size() == 3 &&
                          res.eigenvalues[0] < res.eigenvalues[1] &&
                          res.eigenvalues[1] < res.eigenvalues[2];
        return {increasing, "omega " + fmt("%.6f", omega) + ", residual " + fmt("%.2e", residual) +
                                ", 3 bound states at 1.05*omega: " +
                                (increasing ? "present" : "MISSING")};
    });
}

std::vector<CheckResult> verify_quick() {
    return {check_truncation_roots(), check_closed_forms(), check_oscillator_exact(),
            check_paper_spectra()};
}

std::vector<CheckResult> verify_full() {
    std::vector<CheckResult> all = verify_quick();
    all.push_back(check_truncation_on_curves());
    all.push_back(check_hellmann_feynman_grid());
    all.push_back(check_asymptotes());
    all.push_back(check_oracle_equivalence());
    all.push_back(check_refutation_demo());
    return all;
}

}  // namespace radspec
