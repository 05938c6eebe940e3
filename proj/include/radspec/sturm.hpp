#pragma once

#include <vector>

namespace radspec {

// Symmetric tridiagonal eigensolving by Sturm-sequence bisection.  diag has
// n entries, off has n-1.  Bisection per eigenvalue index is independent
// work, so the parallel kernel splits over indices; the serial variant is
// the reference implementation and must produce bit-identical results.

// Number of eigenvalues strictly below x (sign count of the LDL^T pivots).
int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& off, double x);

// Lowest k eigenvalues, ascending.
std::vector<double> sturm_lowest(const std::vector<double>& diag, const std::vector<double>& off,
                                 int k);
std::vector<double> sturm_lowest_serial(const std::vector<double>& diag,
                                        const std::vector<double>& off, int k);

// Eigenvector for an isolated eigenvalue by shifted inverse iteration,
// normalized to unit Euclidean length with a deterministic start.
std::vector<double> tridiag_eigenvector(const std::vector<double>& diag,
                                        const std::vector<double>& off, double eigenvalue);

}  // namespace radspec
