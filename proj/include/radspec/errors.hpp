#pragma once

#include <stdexcept>
#include <string>

namespace radspec {

// Reduction to the radial operator failed: the inverse-square term is too
// attractive (gamma_s^2 + 2 m a1 < 0) and the reduced model is undefined.
struct AttractiveSingularity : std::runtime_error {
    explicit AttractiveSingularity(const std::string& what) : std::runtime_error(what) {}
};

// A scan interval was empty, unordered, or not strictly positive.
struct InvalidRange : std::runtime_error {
    explicit InvalidRange(const std::string& what) : std::runtime_error(what) {}
};

// Fewer real roots were recovered than the termination condition guarantees;
// a numerical failure, not a mathematical one.
struct RootCountMismatch : std::runtime_error {
    explicit RootCountMismatch(const std::string& what) : std::runtime_error(what) {}
};

// A series that was required to terminate at polynomial degree n does not.
struct NotTruncated : std::runtime_error {
    explicit NotTruncated(const std::string& what) : std::runtime_error(what) {}
};

// Cholesky factorization of the Gram matrix broke down at working precision.
// The basis is too large for the selected precision; reduce the size or use
// the extended-precision mode.
struct IllConditionedOverlap : std::runtime_error {
    explicit IllConditionedOverlap(const std::string& what) : std::runtime_error(what) {}
};

// The requested eigenfunction has a non-negligible tail at the grid edge;
// the solve domain must grow before the eigenvalue can be trusted.
struct DomainTooSmall : std::runtime_error {
    explicit DomainTooSmall(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace radspec
