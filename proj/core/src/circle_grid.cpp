#include "zspulse/circle_grid.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "zspulse/fft.hpp"

namespace zs {

CircleGrid::CircleGrid(CVector values) : values_(std::move(values)) {
  if (!is_pow2(values_.size()))
    throw std::invalid_argument("CircleGrid size must be a power of two");
}

CircleGrid CircleGrid::constant(std::size_t n, Complex c) {
  return CircleGrid(CVector(n, c));
}

Complex CircleGrid::point(std::size_t k) const {
  const double th = angle(k);
  return {std::cos(th), std::sin(th)};
}

double CircleGrid::angle(std::size_t k) const {
  return kTwoPi * static_cast<double>(k) / static_cast<double>(values_.size());
}

LaurentSeries CircleGrid::to_series(double drop_tol) const {
  const std::size_t n = values_.size();
  CVector hat = values_;
  forward_fft(hat);
  for (auto& v : hat) v /= static_cast<double>(n);
  // unwrap: bins [0, n/2) are indices 0..n/2-1, bins [n/2, n) are negative
  const std::int64_t half = static_cast<std::int64_t>(n / 2);
  CVector coeffs(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t idx = static_cast<std::int64_t>(k);
    if (idx >= half) idx -= static_cast<std::int64_t>(n);
    coeffs[static_cast<std::size_t>(idx + half)] = hat[k];
  }
  if (drop_tol > 0.0) {
    for (auto& c : coeffs)
      if (std::abs(c) < drop_tol) c = Complex{};
  }
  return LaurentSeries(-half, std::move(coeffs));
}

CircleGrid CircleGrid::pointwise_conj() const {
  CVector out(values_);
  for (auto& v : out) v = std::conj(v);
  return CircleGrid(std::move(out));
}

CircleGrid operator+(const CircleGrid& a, const CircleGrid& b) {
  assert(a.size() == b.size());
  CVector out(a.values_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.values_[k];
  return CircleGrid(std::move(out));
}

CircleGrid operator-(const CircleGrid& a, const CircleGrid& b) {
  assert(a.size() == b.size());
  CVector out(a.values_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b.values_[k];
  return CircleGrid(std::move(out));
}

CircleGrid operator*(const CircleGrid& a, const CircleGrid& b) {
  assert(a.size() == b.size());
  CVector out(a.values_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] *= b.values_[k];
  return CircleGrid(std::move(out));
}

CircleGrid operator/(const CircleGrid& a, const CircleGrid& b) {
  assert(a.size() == b.size());
  CVector out(a.values_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] /= b.values_[k];
  return CircleGrid(std::move(out));
}

CircleGrid sample(const LaurentSeries& f, std::size_t n) {
  if (!is_pow2(n)) throw std::invalid_argument("grid size must be a power of two");
  if (f.support_width() > n)
    throw std::invalid_argument("grid too small for the series support");
  CVector bins(n, Complex{});
  for (std::int64_t m = f.min_index(); m <= f.max_index(); ++m) {
    std::int64_t k = m % static_cast<std::int64_t>(n);
    if (k < 0) k += static_cast<std::int64_t>(n);
    bins[static_cast<std::size_t>(k)] += f.coeff(m);
  }
  inverse_fft(bins);
  for (auto& v : bins) v *= static_cast<double>(n);
  return CircleGrid(std::move(bins));
}

}  // namespace zs
