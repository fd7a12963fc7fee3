#pragma once

#include <optional>

#include "zspulse/circle_grid.hpp"
#include "zspulse/forward.hpp"
#include "zspulse/remez.hpp"
#include "zspulse/spectral.hpp"

namespace zs {

// Stereographic inverse of profile_from_r. Rejects profiles touching the
// south pole (M_z <= -1 + 1e-9), where r blows up.
CVector r_from_profile(const MagnetizationProfile& m);

struct IdealProfileSpec {
  double theta0 = 0.5 * kPi;  // flip angle, radians
  double z0 = 0.0;            // slice center
  double c0 = 1.0;            // slice half-width
};

// Reflection samples of the ideal slice profile with erf-smoothed edges of
// width tau (frequency units). Pure imaginary on the circle: the slice flips
// about the x-axis.
CircleGrid ideal_profile_r(const IdealProfileSpec& spec, double delta, double tau,
                           std::size_t grid_size);

// (a, b) reconstruction from reduced data: a = Blaschke * outer, b = r a.
struct AbFromR {
  CircleGrid a;
  CircleGrid b;
  CircleGrid r;
  CVector energies;
  OuterFunction outer;

  Complex a_disk(Complex w) const;       // analytic extension inside the disk
  Complex a_prime_at(std::size_t k) const;  // a'(w_k)
};

AbFromR ab_from_r(const CircleGrid& r, const CVector& energies);
AbFromR ab_from_r(const ReducedScatteringData& data, std::size_t grid_size);

// Left reduced data: s = -conj(b)/a and the left norming constants
// c~_k = -1/(c_k a'(w_k)^2 w_k).
struct LeftData {
  CircleGrid s;
  std::vector<ReducedBoundState> tilde;  // (w_k, c~_k)
};
LeftData left_data(const ReducedScatteringData& data, const AbFromR& ab);

// Ripple conversions between designer-space ripples and profile-space
// ripples (transverse out of slice, longitudinal in slice).
double delta2_trans_from_ist(double d);   // 2d/(1+d^2)
double delta2_trans_from_slr(double d);   // 2d sqrt(1-d^2)
double delta1_long_from_ist(double d);    // (d-d^2/2)/(1-(d-d^2/2))
double delta1_long_from_slr(double d);    // 2 sqrt2 d + 2d^2
double delta2_ist_from_trans(double t);   // inverse of the first map
double delta2_slr_from_trans(double t);   // inverse of the second map

struct EquirippleSpec {
  std::int64_t rho = 1;                 // rephasing steps of the inverted pulse
  double tau = 0.0;                     // transition width, radians of theta
  std::optional<double> delta1;         // in-slice ripple
  std::optional<double> delta2;         // out-of-slice ripple
  double band_lo = 0.0, band_hi = 0.0;  // passband in theta, within (-pi, pi)
};

struct EquirippleResult {
  LaurentSeries r;         // real on the circle, support within [-(rho-1), rho-1]
  double achieved_delta1 = 0.0;
  double achieved_delta2 = 0.0;
  int alternations = 0;
};

// Equiripple approximation of the band indicator by a real trigonometric
// polynomial; the absent ripple parameter is solved for by adjusting the
// Parks-McClellan weight ratio.
EquirippleResult equiripple_r(const EquirippleSpec& spec, std::size_t grid_size);

struct SelfRefocusedResult {
  CircleGrid r;
  LaurentSeries completion;  // analytic exponent R
  CVector disk_poles;        // zeros of 1 + e^R inside the disk
};

// r = e^R/(1+e^R) with Re R = k1 in band, -k2 off band, raised-cosine
// transition of width tau on each side; off-band mean subtracted so that
// r -> 0 away from the slice.
SelfRefocusedResult self_refocused_r(double k1, double k2, double tau,
                                     double band_lo, double band_hi,
                                     std::size_t grid_size);

// Self-refocused design hitting only the x-component: r = (1-R)/(1+R) with
// |R| = sqrt((1-Mx)/(1+Mx)) outer. Requires |Mx| < 1 everywhere.
CircleGrid half_pulse_r(const std::vector<double>& mx);

}  // namespace zs
