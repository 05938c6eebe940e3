// Timing comparison of the OpenMP kernels against their serial reference
// implementations.  Also asserts that both produce identical results.

#include "radspec/oracle.hpp"
#include "radspec/sturm.hpp"
#include "radspec/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif

    // --- Sturm bisection on a large discretized operator ---
    {
        const radspec::ReducedParams params{0.0, 2.0, 1.0};
        std::vector<double> diag, off;
        radspec::fd_tridiagonal(params, 10.0, 200000, diag, off);
        const int k = 12;

        std::vector<double> w_par, w_ser;
        const double t_ser = time_best_of(3, [&] { w_ser = radspec::sturm_lowest_serial(diag, off, k); });
        const double t_par = time_best_of(3, [&] { w_par = radspec::sturm_lowest(diag, off, k); });

        double dev = 0.0;
        for (int i = 0; i < k; ++i) dev = std::max(dev, std::fabs(w_par[i] - w_ser[i]));
        std::printf("sturm_lowest  n=200000 k=%d   serial %.3f s   parallel %.3f s   speedup %.2fx   max|diff| %.1e\n",
                    k, t_ser, t_par, t_ser / t_par, dev);
    }

    // --- variational sweep over a-grid points ---
    {
        radspec::SweepRequest req;
        req.gamma = 0.0;
        req.b = 1.0;
        req.a_min = -2.0;
        req.a_max = 6.0;
        req.steps = 16;
        req.nu_max = 3;
        req.n_max = 2;
        req.basis_size = 24;
        req.mode = radspec::PrecisionMode::extended;

        radspec::SweepTable tab_par, tab_ser;
        const double t_ser = time_best_of(1, [&] { tab_ser = radspec::sweep_table_serial(req); });
        const double t_par = time_best_of(1, [&] { tab_par = radspec::sweep_table(req); });

        double dev = 0.0;
        for (std::size_t i = 0; i < tab_ser.rows.size(); ++i)
            dev = std::max(dev, std::fabs(tab_par.rows[i].w - tab_ser.rows[i].w));
        std::printf("sweep_table   %d pts x %d curves  serial %.3f s   parallel %.3f s   speedup %.2fx   max|diff| %.1e\n",
                    req.steps, req.nu_max + 1, t_ser, t_par, t_ser / t_par, dev);
    }
    return 0;
}
