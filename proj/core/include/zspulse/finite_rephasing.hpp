#pragma once

#include "zspulse/pulse.hpp"
#include "zspulse/remez.hpp"
#include "zspulse/types.hpp"

namespace zs {

// Rational reflection data r = w^{-rho} P/Q with P(0) = 0.
struct RationalR {
  CVector P;  // numerator coefficients, P[0] must vanish
  CVector Q;  // denominator, Q[0] != 0
  std::int64_t rho = 0;
};

struct FrtResult {
  HardPulse pulse;
  double truncated_tail = 0.0;  // sum |omega_j| below the stopping index
};

// Direct rational recursion for finite-rephasing data; the output vanishes
// for j >= rho by construction and is truncated below once |gamma_j| stays
// under 1e-12 for 16 consecutive steps (or at j_min when given).
FrtResult frt_invert(const RationalR& data, std::int64_t j_min = 0,
                     bool use_j_min = false);

// Unitary polynomial pair |A|^2 + |B|^2 = 1 on the circle, degree T.
struct SlrPair {
  CVector A;  // A[0] real positive
  CVector B;
  std::int64_t rho = 0;
};

double unitarity_defect(const SlrPair& pair, std::size_t probe = 1024);

// Finite-duration inversion: exactly deg(B)+1 potentially nonzero impulses
// on [rho-1-T, rho-1]. Realizes b = w^{1-rho} B, a = A.
HardPulse slr_invert(const SlrPair& pair);

// Minimum-phase spectral factor: |A|^2 = 1 - |B|^2 on the circle, roots
// outside the closed disk, A(0) > 0. Root-splitting of 1 - B B*; cepstral
// fallback when roots crowd the circle.
CVector spectral_factor_A_from_B(const CVector& B, double* root_margin = nullptr);

struct SlrDesign {
  SlrPair pair;
  double achieved_ripple_pass = 0.0;  // on |B|^2 in slice
  double achieved_ripple_stop = 0.0;  // on |B|^2 out of slice
};

// Linear-phase magnitude design: |B(theta)|^2 approximates (1 - Mz)/2 with
// an equiripple cosine polynomial of degree T/2 (T even), then A by spectral
// factorization. Band edges in theta.
SlrDesign slr_design_b(double mz_in_slice, double band_hi, double tau,
                       std::int64_t degree_t, double stop_weight,
                       std::int64_t rho);

}  // namespace zs
