#pragma once

#include <optional>

#include "zspulse/circle_grid.hpp"
#include "zspulse/laurent.hpp"
#include "zspulse/pulse.hpp"

namespace zs {

enum class JostSide { plus, minus };

// One step of a Jost solution pair. For side minus, A and B are the actual
// Jost functions (A analytic in the disk, w^{-1}B analytic). For side plus
// the stored polynomials are the starred pair conj(A+) and w*conj(B+), which
// are the disk-analytic representatives.
struct JostPair {
  JostSide side = JostSide::minus;
  std::int64_t j = 0;
  LaurentSeries A;
  LaurentSeries B;
};

struct BoundState {
  Complex w;        // zero of a inside the unit disk
  Complex c_prime;  // norming constant
};

struct ReducedBoundState {
  Complex w;
  Complex c;  // c = c_prime / a'(w)
};

struct DiscreteScatteringData {
  LaurentSeries a;  // polynomial in w, a(0) > 0
  LaurentSeries b;
  std::vector<BoundState> bound_states;
};

struct ReducedScatteringData {
  LaurentSeries r;
  std::vector<ReducedBoundState> bound_states;
};

struct ForwardScattering {
  LaurentSeries a;
  LaurentSeries b;
  std::vector<JostPair> minus_trail;  // filled when keep_trail is set
};

// Exact polynomial recursion for the minus Jost solutions; a and b come out
// as finite Laurent series with |a|^2+|b|^2 = 1 on the circle.
ForwardScattering forward_scatter(const HardPulse& p, bool keep_trail = false);

// gamma weights driving the recursion, gamma_j = tan|mu_j| mu_j/|mu_j|
CVector pulse_gammas(const HardPulse& p);

struct BoundStateScan {
  std::vector<BoundState> states;
  CVector near_boundary;  // roots in [1-kBoundaryTol, 1), excluded
};

// Roots of the polynomial a inside the disk via companion-matrix
// eigenvalues; norming constants from the Jost pairs at j = 0, cross-checked
// at j = 1. Throws NonSimpleZero when two roots nearly coincide.
BoundStateScan find_bound_states(const HardPulse& p);

// |sum_j log(1+tan^2(|omega_j|/2)) - (1/2pi) int log(1+|r|^2) + 2 sum_k log|w_k||
double energy_residual(const HardPulse& p, const DiscreteScatteringData& data,
                       std::size_t grid_size = 4096);

// M = [2 Re r, 2 Im r, 1-|r|^2] / (1+|r|^2)
MagnetizationProfile profile_from_r(const CVector& r_samples,
                                    const std::vector<double>& freqs);
MagnetizationProfile profile_from_r(const CircleGrid& r, double delta);

}  // namespace zs
