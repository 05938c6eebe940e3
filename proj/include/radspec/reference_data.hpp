#pragma once

#include <array>

// Frozen reference eigenvalues of the reduced operator for gamma = 0, b = 1.
// The three on-curve configurations sit on the n = 2 termination roots in a;
// the fourth is off every termination curve.  Values are 10-digit published
// upper bounds, re-validated here by two independent routes (extended-
// precision Rayleigh-Ritz and Richardson-extrapolated finite differences).

namespace radspec::reference {

inline constexpr double kTruncationN2B1W = 5.75;
inline constexpr std::array<double, 3> kTruncationN2B1Roots = {-1.940551663, 1.190016441,
                                                               5.250535221};

struct SpectrumCase {
    double a;
    double b;
    int count;
    std::array<double, 5> w;  // first `count` entries meaningful
};

inline constexpr SpectrumCase kOnCurveLow = {
    -1.940551663, 1.0, 4, {5.750000000, 9.894040660, 14.06831985, 18.24977457, 0.0}};
inline constexpr SpectrumCase kOnCurveMid = {
    1.190016441, 1.0, 4, {-0.1664353619, 5.750000000, 10.52307155, 15.06421047, 0.0}};
inline constexpr SpectrumCase kOnCurveHigh = {
    5.250535221, 1.0, 4, {-27.32460313, -0.5108147276, 5.750000000, 10.90599171, 0.0}};
inline constexpr SpectrumCase kOffCurve = {
    2.0, 1.0, 5, {-3.230518994, 4.510929109, 9.532275968, 14.19728140, 18.70978427}};

inline constexpr std::array<SpectrumCase, 4> kSpectrumCases = {kOnCurveLow, kOnCurveMid,
                                                               kOnCurveHigh, kOffCurve};

}  // namespace radspec::reference
