#include "zspulse/pulse.hpp"

#include <cmath>
#include <stdexcept>

#include "zspulse/errors.hpp"

namespace zs {

HardPulse::HardPulse(double delta, std::int64_t start, CVector omegas)
    : delta_(delta), start_(start), omegas_(std::move(omegas)) {
  if (delta_ <= 0.0) throw std::invalid_argument("pulse time step must be positive");
  std::size_t lead = 0;
  while (lead < omegas_.size() && omegas_[lead] == Complex{}) ++lead;
  std::size_t tail = omegas_.size();
  while (tail > lead && omegas_[tail - 1] == Complex{}) --tail;
  start_ += static_cast<std::int64_t>(lead);
  omegas_ = CVector(omegas_.begin() + lead, omegas_.begin() + tail);
  if (omegas_.empty()) start_ = 0;
}

Complex HardPulse::omega(std::int64_t j) const {
  const std::int64_t i = j - start_;
  if (i < 0 || i >= static_cast<std::int64_t>(omegas_.size())) return {};
  return omegas_[static_cast<std::size_t>(i)];
}

double HardPulse::abs_sum() const {
  double s = 0.0;
  for (const auto& w : omegas_) s += std::abs(w);
  return s;
}

double HardPulse::max_amplitude() const {
  double m = 0.0;
  for (const auto& w : omegas_) m = std::max(m, std::abs(w));
  return m / delta_;
}

double HardPulse::log_energy_sum() const {
  double s = 0.0;
  for (const auto& w : omegas_) {
    const double t = std::tan(0.5 * std::abs(w));
    s += std::log1p(t * t);
  }
  return s;
}

double HardPulse::soft_energy() const {
  double s = 0.0;
  for (const auto& w : omegas_) s += std::norm(w);
  return s / delta_;
}

double SoftPulse::energy() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return s * delta;
}

SoftPulse soften(const HardPulse& p) {
  SoftPulse s;
  s.delta = p.delta();
  s.start = p.start();
  s.amplitudes = p.omegas();
  for (auto& a : s.amplitudes) a /= p.delta();
  return s;
}

double MagnetizationProfile::max_norm_deviation() const {
  double worst = 0.0;
  for (const auto& v : vecs) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    worst = std::max(worst, std::abs(n - 1.0));
  }
  return worst;
}

CVector to_potential(const HardPulse& p) {
  CVector mu(p.omegas());
  for (auto& m : mu) m = Complex{0.0, -0.5} * std::conj(m);
  return mu;
}

Complex mu_of_gamma(Complex gamma) {
  const double g = std::abs(gamma);
  if (g == 0.0) return {};
  return gamma / g * std::atan(g);
}

Complex gamma_of_mu(Complex mu) {
  const double m = std::abs(mu);
  if (m == 0.0) return {};
  if (m >= 0.5 * kPi)
    throw FlipAngleOverflow("half flip angle reaches pi/2; no single impulse represents it");
  return mu / m * std::tan(m);
}

Complex omega_of_gamma(Complex gamma) {
  return Complex{0.0, -2.0} * std::conj(mu_of_gamma(gamma));
}

Complex gamma_of_omega(Complex omega) {
  return gamma_of_mu(Complex{0.0, -0.5} * std::conj(omega));
}

double softening_error_bound(const HardPulse& p, double z) {
  return 0.5 * p.delta() * std::abs(z) * p.abs_sum();
}

}  // namespace zs
