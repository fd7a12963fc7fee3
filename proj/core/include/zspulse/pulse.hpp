#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "zspulse/types.hpp"

namespace zs {

// Hard pulse: time step delta plus impulse weights omega_j for
// j = start ... start+n-1. Canonical form trims zero impulses at both ends;
// rephasing steps and duration are derived, never stored.
class HardPulse {
 public:
  HardPulse() : delta_(1.0) {}
  HardPulse(double delta, std::int64_t start, CVector omegas);

  double delta() const { return delta_; }
  std::int64_t start() const { return start_; }
  std::int64_t end() const {  // one past the last impulse
    return start_ + static_cast<std::int64_t>(omegas_.size());
  }
  const CVector& omegas() const { return omegas_; }
  Complex omega(std::int64_t j) const;
  bool is_zero() const { return omegas_.empty(); }

  // smallest rho with omega_j = 0 for all j >= rho
  std::int64_t rephasing_steps() const { return end(); }
  // steps between first and last nonzero impulse
  std::int64_t duration_steps() const {
    return omegas_.empty() ? 0 : static_cast<std::int64_t>(omegas_.size()) - 1;
  }
  std::size_t impulse_count() const { return omegas_.size(); }

  double abs_sum() const;          // sum |omega_j|
  double max_amplitude() const;    // max |omega_j| / delta
  // sum log(1 + tan^2(|omega_j|/2)), the left side of the energy identity
  double log_energy_sum() const;
  // sum |omega_j|^2 / delta, the softened-pulse energy
  double soft_energy() const;

 private:
  double delta_;
  std::int64_t start_ = 0;
  CVector omegas_;
};

// Piecewise-constant pulse with value omega_j / delta on [j delta, (j+1) delta).
struct SoftPulse {
  double delta = 1.0;
  std::int64_t start = 0;
  CVector amplitudes;

  double energy() const;  // integral |amplitude|^2 dt
};

SoftPulse soften(const HardPulse& p);

// Unit 3-vectors sampled on a frequency grid.
struct MagnetizationProfile {
  std::vector<double> freqs;
  std::vector<std::array<double, 3>> vecs;

  double max_norm_deviation() const;
};

// Potential weights mu_j = -(i/2) conj(omega_j).
CVector to_potential(const HardPulse& p);

Complex mu_of_gamma(Complex gamma);      // (gamma/|gamma|) atan|gamma|, 0 -> 0
Complex gamma_of_mu(Complex mu);         // inverse; requires |mu| < pi/2
Complex omega_of_gamma(Complex gamma);   // -2i conj(mu_of_gamma(gamma))
Complex gamma_of_omega(Complex omega);

// Conjectured spherical-arc bound on the hard-vs-softened profile
// discrepancy at frequency z: (delta |z| / 2) sum |omega_j|.
double softening_error_bound(const HardPulse& p, double z);

}  // namespace zs
