#pragma once

#include <complex>
#include <vector>

namespace zs {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Bound states must sit strictly inside the unit disk by this margin.
inline constexpr double kBoundaryTol = 1e-6;

// Tail mass threshold for truncating inverse-scattering kernel sequences.
inline constexpr double kTailTol = 1e-10;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace zs
