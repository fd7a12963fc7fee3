#include "zspulse/bloch.hpp"

#include <cmath>

namespace zs {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 axpy(double c, const Vec3& x, const Vec3& y) {
  return {y[0] + c * x[0], y[1] + c * x[1], y[2] + c * x[2]};
}

Vec3 rotate_z(double angle, const Vec3& v) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v[0] - s * v[1], s * v[0] + c * v[1], v[2]};
}

}  // namespace

Vec3 rotate_axis_angle(const Vec3& n, double angle, const Vec3& v) {
  // Rodrigues formula, counterclockwise about the unit axis n.
  const double c = std::cos(angle), s = std::sin(angle);
  const Vec3 nxv = cross(n, v);
  const double nv = dot(n, v);
  Vec3 out;
  for (int i = 0; i < 3; ++i)
    out[i] = v[i] * c + nxv[i] * s + n[i] * nv * (1.0 - c);
  return out;
}

double geodesic_distance(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

MagnetizationProfile hard_simulate(const HardPulse& p, const std::vector<double>& freqs) {
  MagnetizationProfile out;
  out.freqs = freqs;
  out.vecs.resize(freqs.size());
  const double delta = p.delta();
  const std::int64_t t_end = p.end();
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    const double z = freqs[i];
    Vec3 m{0.0, 0.0, 1.0};
    for (std::int64_t j = p.start(); j < p.end(); ++j) {
      const Complex w = p.omega(j);
      const double a = std::abs(w);
      if (a > 0.0) {
        const Vec3 axis{w.real() / a, w.imag() / a, 0.0};
        m = rotate_axis_angle(axis, a, m);
      }
      m = rotate_z(delta * z, m);
    }
    m = rotate_z(-delta * z * static_cast<double>(t_end), m);
    out.vecs[i] = m;
  }
  return out;
}

MagnetizationProfile hard_simulate(const HardPulse& p, std::size_t grid_size) {
  std::vector<double> zs(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k)
    zs[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(grid_size) / p.delta();
  return hard_simulate(p, zs);
}

BlochResult bloch_simulate(const SoftPulse& s, const std::vector<double>& freqs,
                           int substeps_per_step) {
  BlochResult res;
  res.profile.freqs = freqs;
  res.profile.vecs.resize(freqs.size());
  const double h = s.delta / static_cast<double>(substeps_per_step);
  const double t_end = s.delta * static_cast<double>(s.start +
      static_cast<std::int64_t>(s.amplitudes.size()));

  for (std::size_t i = 0; i < freqs.size(); ++i) {
    const double z = freqs[i];
    Vec3 m{0.0, 0.0, 1.0};
    for (const auto& amp : s.amplitudes) {
      const Vec3 b{amp.real(), amp.imag(), z};
      auto f = [&b](const Vec3& v) { return cross(b, v); };
      for (int step = 0; step < substeps_per_step; ++step) {
        const Vec3 k1 = f(m);
        const Vec3 k2 = f(axpy(0.5 * h, k1, m));
        const Vec3 k3 = f(axpy(0.5 * h, k2, m));
        const Vec3 k4 = f(axpy(h, k3, m));
        for (int c = 0; c < 3; ++c)
          m[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
      }
    }
    res.max_norm_drift = std::max(res.max_norm_drift, std::abs(norm(m) - 1.0));
    m = rotate_z(-z * t_end, m);
    const double n = norm(m);
    if (n > 0.0)
      for (auto& c : m) c /= n;
    res.profile.vecs[i] = m;
  }
  return res;
}

}  // namespace zs
