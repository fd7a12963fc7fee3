#include "zspulse/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "zspulse/errors.hpp"
#include "zspulse/fft.hpp"

namespace zs {

void validate_energies(const CVector& energies) {
  for (const auto& wk : energies) {
    if (std::abs(wk) == 0.0)
      throw DegenerateBoundState("bound-state energy at the origin");
    if (std::abs(wk) >= 1.0 - kBoundaryTol)
      throw BoundStateOnBoundary("bound-state energy too close to the unit circle");
  }
}

namespace {

Complex blaschke_factor(Complex wk, Complex w) {
  return (std::conj(wk) / std::abs(wk)) * (wk - w) / (1.0 - std::conj(wk) * w);
}

}  // namespace

Complex blaschke_eval(const CVector& energies, Complex w) {
  Complex prod{1.0, 0.0};
  for (const auto& wk : energies) prod *= blaschke_factor(wk, w);
  return prod;
}

CircleGrid blaschke_samples(const CVector& energies, std::size_t grid_size) {
  validate_energies(energies);
  CVector vals(grid_size);
  CircleGrid shape = CircleGrid::constant(grid_size, Complex{});
  for (std::size_t k = 0; k < grid_size; ++k)
    vals[k] = blaschke_eval(energies, shape.point(k));
  return CircleGrid(std::move(vals));
}

Complex blaschke_derivative_at_zero(const CVector& energies, std::size_t k) {
  validate_energies(energies);
  const Complex wk = energies[k];
  // d/dw [(conj(wk)/|wk|)(wk-w)/(1-conj(wk) w)] at w = wk
  const Complex dfk = -(std::conj(wk) / std::abs(wk)) / (1.0 - std::norm(wk));
  Complex rest{1.0, 0.0};
  for (std::size_t l = 0; l < energies.size(); ++l)
    if (l != k) rest *= blaschke_factor(energies[l], wk);
  return dfk * rest;
}

LaurentSeries analytic_completion(const std::vector<double>& g) {
  const std::size_t n = g.size();
  if (!is_pow2(n)) throw std::invalid_argument("grid size must be a power of two");
  CVector hat(n);
  for (std::size_t k = 0; k < n; ++k) hat[k] = Complex{g[k], 0.0};
  forward_fft(hat);
  for (auto& v : hat) v /= static_cast<double>(n);
  // Keep bin 0 once, double bins 1..n/2-1, keep the (real) Nyquist bin once.
  // For real input this reproduces Re H = g exactly on the grid.
  CVector coeffs(n / 2 + 1);
  coeffs[0] = hat[0];
  for (std::size_t m = 1; m < n / 2; ++m) coeffs[m] = 2.0 * hat[m];
  coeffs[n / 2] = hat[n / 2];
  return LaurentSeries(0, std::move(coeffs));
}

Complex OuterFunction::eval(Complex w) const {
  return std::exp(completion.evaluate(w));
}

OuterFunction outer_from_log_modulus(const std::vector<double>& log_mod) {
  OuterFunction out;
  out.completion = analytic_completion(log_mod);
  CVector vals(log_mod.size());
  CircleGrid h = sample(out.completion, log_mod.size());
  for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = std::exp(h[k]);
  out.boundary = CircleGrid(std::move(vals));
  return out;
}

}  // namespace zs
