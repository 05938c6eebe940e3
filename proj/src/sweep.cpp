#include "radspec/sweep.hpp"

#include "radspec/errors.hpp"
#include "radspec/frobenius.hpp"

#include <cmath>
#include <stdexcept>

namespace radspec {

namespace {

void validate(const SweepRequest& req) {
    if (!(req.a_min < req.a_max)) throw InvalidRange("sweep: need a_min < a_max");
    if (req.steps < 2) throw std::invalid_argument("sweep: need at least 2 steps");
    if (req.nu_max < 0) throw std::invalid_argument("sweep: nu_max must be >= 0");
    if (req.n_max < 0) throw std::invalid_argument("sweep: n_max must be >= 0");
}

double a_at(const SweepRequest& req, int k) {
    return req.a_min + (req.a_max - req.a_min) * k / (req.steps - 1);
}

// one grid point: the lowest nu_max+1 eigenvalues at a
bool solve_point(const SweepRequest& req, double a, std::vector<double>& w) {
    try {
        const ReducedParams params{req.gamma, a, req.b};
        const BasisSpec basis{req.gamma, req.basis_size, 1.0};
        w = spectrum(params, req.nu_max + 1, basis, req.mode, false).eigenvalues;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

SweepTable build_table(const SweepRequest& req, const std::vector<std::vector<double>>& per_point,
                       const std::vector<char>& ok) {
    SweepTable table;
    table.rows.reserve(static_cast<std::size_t>(req.steps) * (req.nu_max + 1));
    for (int nu = 0; nu <= req.nu_max; ++nu) {
        for (int k = 0; k < req.steps; ++k) {
            SweepPoint pt;
            pt.a = a_at(req, k);
            pt.nu = nu;
            pt.ok = ok[static_cast<std::size_t>(k)] != 0;
            pt.w = pt.ok ? per_point[static_cast<std::size_t>(k)][static_cast<std::size_t>(nu)]
                         : 0.0;
            table.rows.push_back(pt);
        }
    }
    for (int k = 0; k < req.steps; ++k)
        if (!ok[static_cast<std::size_t>(k)]) ++table.failures;

    for (int n = 1; n <= req.n_max; ++n) {
        const TruncationSolution sol = truncation_a_roots(req.gamma, n, req.b);
        for (std::size_t i = 0; i < sol.a_roots.size(); ++i)
            table.overlay.push_back(
                OverlayPoint{n, static_cast<int>(i) + 1, sol.a_roots[i], sol.w});
    }
    return table;
}

}  // namespace

SweepTable sweep_table(const SweepRequest& req) {
    validate(req);
    std::vector<std::vector<double>> per_point(static_cast<std::size_t>(req.steps));
    std::vector<char> ok(static_cast<std::size_t>(req.steps), 0);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < req.steps; ++k)
        ok[static_cast<std::size_t>(k)] =
            solve_point(req, a_at(req, k), per_point[static_cast<std::size_t>(k)]) ? 1 : 0;
    return build_table(req, per_point, ok);
}

SweepTable sweep_table_serial(const SweepRequest& req) {
    validate(req);
    std::vector<std::vector<double>> per_point(static_cast<std::size_t>(req.steps));
    std::vector<char> ok(static_cast<std::size_t>(req.steps), 0);
    for (int k = 0; k < req.steps; ++k)
        ok[static_cast<std::size_t>(k)] =
            solve_point(req, a_at(req, k), per_point[static_cast<std::size_t>(k)]) ? 1 : 0;
    return build_table(req, per_point, ok);
}

}  // namespace radspec
