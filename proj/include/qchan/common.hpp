#pragma once

#include <complex>

namespace qchan {

using cplx = std::complex<double>;

// Default tolerance for equality-style checks (hermiticity, trace
// preservation, unitality, Choi comparison).
inline constexpr double kEqTol = 1e-10;

// Default relative tolerance for numeric rank decisions.
inline constexpr double kRankTol = 1e-12;

// Default cap on the total dimension of tensor powers (3^4).
inline constexpr int kDimensionCap = 81;

}  // namespace qchan
