#pragma once

#include <vector>

#include "zspulse/circle_grid.hpp"
#include "zspulse/laurent.hpp"
#include "zspulse/types.hpp"

namespace zs {

// Blaschke product with prescribed simple zeros inside the unit disk:
//   prod_k (conj(w_k)/|w_k|) (w_k - w) / (1 - conj(w_k) w).
// Unimodular on the circle, positive at the origin.
// Rejects |w_k| >= 1 - kBoundaryTol and w_k = 0.
Complex blaschke_eval(const CVector& energies, Complex w);
CircleGrid blaschke_samples(const CVector& energies, std::size_t grid_size);
// d/dw of the full product at zero number k (the zero itself contributes
// through its linear factor only).
Complex blaschke_derivative_at_zero(const CVector& energies, std::size_t k);
void validate_energies(const CVector& energies);

// Analytic completion: the unique H with nonnegative-index coefficients,
// Re H = g on the circle and H(0) real. Input must be real-valued samples.
LaurentSeries analytic_completion(const std::vector<double>& g);

// Analytic-in-disk function with |G| = exp(log_mod) on the circle and
// G(0) = exp(mean log_mod) > 0.
struct OuterFunction {
  CircleGrid boundary;        // samples of G on the grid
  LaurentSeries completion;   // H with G = exp(H)
  Complex eval(Complex w) const;
};
OuterFunction outer_from_log_modulus(const std::vector<double>& log_mod);

}  // namespace zs
