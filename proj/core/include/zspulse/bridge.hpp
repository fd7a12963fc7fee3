#pragma once

#include "zspulse/forward.hpp"
#include "zspulse/laurent.hpp"

namespace zs {

// Continuum reduced scattering data sampled for discretization: values of
// the time-domain transform r_hat on the lattice {2 n delta}, plus
// half-plane energies xi_k with constants C_k.
struct ContinuumScatteringData {
  double delta = 0.1;
  std::int64_t start_index = 0;  // lattice index of r_hat_samples[0]
  CVector r_hat_samples;         // r_hat(2 n delta), n = start_index ...
  CVector energies;              // Im xi_k > 0
  CVector constants;             // C_k
};

// Substitution onto the circle: coefficient n of the discrete reflection is
// (delta/pi) r_hat(2 (n-1) delta); w_k = e^{2 i xi_k delta};
// c_k = 2 i delta w_k C_k.
ReducedScatteringData discretize(const ContinuumScatteringData& data);

// (4/pi) int log(1+|r(xi)|^2) dxi + 16 sum Im xi_k, trapezoid on the given
// xi samples. Cross-check quadrature only.
double continuum_energy(const std::vector<double>& xi_grid,
                        const CVector& r_samples, const CVector& energies);

// Convenience adapter: r_hat lattice samples from xi-domain samples by
// Hann-windowed quadrature of the Fourier integral.
CVector r_hat_from_xi_samples(const std::vector<double>& xi_grid,
                              const CVector& r_samples, double delta,
                              std::int64_t n_lo, std::int64_t n_hi);

}  // namespace zs
