#pragma once

#include "zspulse/pulse.hpp"

namespace zs {

using Vec3 = std::array<double, 3>;

Vec3 rotate_axis_angle(const Vec3& axis_unit, double angle, const Vec3& v);
double geodesic_distance(const Vec3& a, const Vec3& b);

// Hard evolution: per impulse, rotation by |omega_j| about the transverse
// axis [Re omega_j, Im omega_j, 0], then rotation by delta*z about z; final
// derotation by -z*t_end about z. Frequencies are in radians per time unit.
MagnetizationProfile hard_simulate(const HardPulse& p, const std::vector<double>& freqs);
// Same profile on the standard circle grid, z_k = angle_k / delta.
MagnetizationProfile hard_simulate(const HardPulse& p, std::size_t grid_size);

struct BlochResult {
  MagnetizationProfile profile;
  double max_norm_drift = 0.0;  // before renormalization
};

// Fixed-step RK4 integration of dM/dt = B x M from equilibrium, with the
// same final derotation as the hard path.
BlochResult bloch_simulate(const SoftPulse& s, const std::vector<double>& freqs,
                           int substeps_per_step = 64);

}  // namespace zs
