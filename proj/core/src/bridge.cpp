#include "zspulse/bridge.hpp"

#include <cmath>

#include "zspulse/errors.hpp"

namespace zs {

ReducedScatteringData discretize(const ContinuumScatteringData& data) {
  if (data.delta <= 0.0) throw ConfigError("time step must be positive");
  ReducedScatteringData out;

  if (!data.r_hat_samples.empty()) {
    CVector coeffs(data.r_hat_samples.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      coeffs[i] = data.delta / kPi * data.r_hat_samples[i];
    out.r = LaurentSeries(data.start_index + 1, std::move(coeffs));
  }

  if (data.constants.size() != data.energies.size())
    throw ConfigError("one norming constant per energy required");
  for (std::size_t k = 0; k < data.energies.size(); ++k) {
    const Complex xi = data.energies[k];
    if (xi.imag() <= 0.0)
      throw EnergyNotInUpperHalfPlane("continuum energies must satisfy Im xi > 0");
    const Complex wk = std::exp(Complex{0.0, 2.0 * data.delta} * xi);
    const Complex ck = Complex{0.0, 2.0 * data.delta} * wk * data.constants[k];
    out.bound_states.push_back({wk, ck});
  }
  return out;
}

double continuum_energy(const std::vector<double>& xi_grid,
                        const CVector& r_samples, const CVector& energies) {
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < xi_grid.size(); ++i) {
    const double f0 = std::log1p(std::norm(r_samples[i]));
    const double f1 = std::log1p(std::norm(r_samples[i + 1]));
    integral += 0.5 * (f0 + f1) * (xi_grid[i + 1] - xi_grid[i]);
  }
  double soliton = 0.0;
  for (const auto& xi : energies) {
    if (xi.imag() <= 0.0)
      throw EnergyNotInUpperHalfPlane("continuum energies must satisfy Im xi > 0");
    soliton += xi.imag();
  }
  return 4.0 / kPi * integral + 16.0 * soliton;
}

CVector r_hat_from_xi_samples(const std::vector<double>& xi_grid,
                              const CVector& r_samples, double delta,
                              std::int64_t n_lo, std::int64_t n_hi) {
  // r_hat(t) = int r(xi) e^{-i t xi} dxi with a Hann taper against
  // truncation ringing
  CVector out(static_cast<std::size_t>(n_hi - n_lo + 1));
  const double span = xi_grid.back() - xi_grid.front();
  const double mid = 0.5 * (xi_grid.back() + xi_grid.front());
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const double t = 2.0 * static_cast<double>(n) * delta;
    Complex acc{};
    for (std::size_t i = 0; i + 1 < xi_grid.size(); ++i) {
      const double h = xi_grid[i + 1] - xi_grid[i];
      auto taper = [&](double xi) {
        return 0.5 * (1.0 + std::cos(kTwoPi * (xi - mid) / span));
      };
      const Complex f0 = r_samples[i] * taper(xi_grid[i]) *
                         std::exp(Complex{0.0, -t * xi_grid[i]});
      const Complex f1 = r_samples[i + 1] * taper(xi_grid[i + 1]) *
                         std::exp(Complex{0.0, -t * xi_grid[i + 1]});
      acc += 0.5 * h * (f0 + f1);
    }
    out[static_cast<std::size_t>(n - n_lo)] = acc;
  }
  return out;
}

}  // namespace zs
