#pragma once

#include <vector>

#include "zspulse/types.hpp"

namespace zs {

// One constrained band for the exchange: approximate the constant `target`
// on [lo, hi] with weight `weight`. Intervals live in [0, pi], disjoint and
// increasing.
struct RemezBand {
  double lo = 0.0;
  double hi = 0.0;
  double target = 0.0;
  double weight = 1.0;
};

struct RemezResult {
  std::vector<double> cos_coeffs;  // a_0 ... a_D
  double delta = 0.0;              // uniform weighted ripple
  int alternations = 0;
  int iterations = 0;
};

// Weighted minimax fit of an even trigonometric polynomial of degree D over
// a union of bands, by multiple-exchange iteration on a dense grid with a
// single-point-exchange fallback. Asymmetric slices are handled one level
// up by rotating the band to the origin.
RemezResult remez_exchange(const std::vector<RemezBand>& bands, int degree,
                           std::size_t dense_points = 0, int max_iterations = 100);

double remez_eval(const RemezResult& fit, double theta);

}  // namespace zs
