#pragma once

#include "radspec/variational.hpp"

#include <vector>

namespace radspec {

struct SweepPoint {
    double a = 0.0;
    int nu = 0;
    double w = 0.0;
    bool ok = true;  // false: solver failed at this point, w is meaningless
};

struct OverlayPoint {
    int n = 0;
    int i = 0;  // 1-based root label, ascending in a
    double a_root = 0.0;
    double w = 0.0;  // termination eigenvalue, exact in (gamma, n, b)
};

// Eigencurve samples W_nu(a) at fixed (gamma, b) plus the termination-point
// overlay.  rows are sorted by (nu, a); overlay by (n, i).
struct SweepTable {
    std::vector<SweepPoint> rows;
    std::vector<OverlayPoint> overlay;
    int failures = 0;
};

struct SweepRequest {
    double gamma = 0.0;
    double b = 0.0;
    double a_min = 0.0;
    double a_max = 0.0;
    int steps = 2;    // number of a samples, >= 2
    int nu_max = 0;   // curves nu = 0..nu_max
    int n_max = 0;    // overlay n = 1..n_max (0: no overlay)
    int basis_size = 30;
    PrecisionMode mode = PrecisionMode::extended;
};

// Parallel kernel (one variational solve per grid point; points are
// independent) and the serial reference it is tested against.
SweepTable sweep_table(const SweepRequest& req);
SweepTable sweep_table_serial(const SweepRequest& req);

}  // namespace radspec
