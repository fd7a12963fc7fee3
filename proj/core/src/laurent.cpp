#include "zspulse/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace zs {

LaurentSeries::LaurentSeries(std::int64_t offset, CVector coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentSeries LaurentSeries::constant(Complex c) {
  return LaurentSeries(0, {c});
}

LaurentSeries LaurentSeries::monomial(std::int64_t n, Complex c) {
  return LaurentSeries(n, {c});
}

void LaurentSeries::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == Complex{}) ++lead;
  std::size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1] == Complex{}) --tail;
  if (lead == tail) {
    offset_ = 0;
    coeffs_.clear();
    return;
  }
  offset_ += static_cast<std::int64_t>(lead);
  coeffs_ = CVector(coeffs_.begin() + lead, coeffs_.begin() + tail);
}

Complex LaurentSeries::coeff(std::int64_t n) const {
  const std::int64_t i = n - offset_;
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

Complex LaurentSeries::evaluate(Complex w0) const {
  if (coeffs_.empty()) return {};
  // Horner over the dense run, then the offset power.
  Complex acc{};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * w0 + coeffs_[i];
  Complex p{1.0, 0.0};
  std::int64_t n = offset_;
  Complex base = w0;
  if (n < 0) {
    base = Complex{1.0, 0.0} / w0;
    n = -n;
  }
  for (; n > 0; n >>= 1) {
    if (n & 1) p *= base;
    base *= base;
  }
  return acc * p;
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
  if (coeffs_.empty()) return {};
  return LaurentSeries(offset_ + k, coeffs_);
}

LaurentSeries LaurentSeries::scaled(Complex c) const {
  CVector out(coeffs_);
  for (auto& v : out) v *= c;
  return LaurentSeries(offset_, std::move(out));
}

LaurentSeries LaurentSeries::conj_reflected() const {
  if (coeffs_.empty()) return {};
  CVector out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i] = std::conj(coeffs_[coeffs_.size() - 1 - i]);
  return LaurentSeries(-max_index(), std::move(out));
}

LaurentSeries LaurentSeries::project_plus() const {
  if (coeffs_.empty() || max_index() < 1) return {};
  const std::int64_t lo = std::max<std::int64_t>(offset_, 1);
  CVector out(coeffs_.begin() + (lo - offset_), coeffs_.end());
  return LaurentSeries(lo, std::move(out));
}

LaurentSeries LaurentSeries::project_minus() const {
  if (coeffs_.empty() || offset_ > -1) return {};
  const std::int64_t hi = std::min<std::int64_t>(max_index(), -1);
  CVector out(coeffs_.begin(), coeffs_.begin() + (hi - offset_ + 1));
  return LaurentSeries(offset_, std::move(out));
}

LaurentSeries LaurentSeries::project_plus_tilde() const {
  return project_plus() + LaurentSeries::constant(0.5 * coeff(0));
}

LaurentSeries LaurentSeries::project_minus_tilde() const {
  return project_minus() + LaurentSeries::constant(0.5 * coeff(0));
}

double LaurentSeries::h1_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double n = static_cast<double>(offset_ + static_cast<std::int64_t>(i));
    s += (1.0 + n * n) * std::norm(coeffs_[i]);
  }
  return std::sqrt(s);
}

double LaurentSeries::l2_norm() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

double LaurentSeries::abs_sum() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.coeffs_.empty()) return b;
  if (b.coeffs_.empty()) return a;
  const std::int64_t lo = std::min(a.offset_, b.offset_);
  const std::int64_t hi = std::max(a.max_index(), b.max_index());
  CVector out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(a.offset_ - lo) + i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(b.offset_ - lo) + i] += b.coeffs_[i];
  return LaurentSeries(lo, std::move(out));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + b.scaled(-1.0);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  CVector out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const Complex ai = a.coeffs_[i];
    if (ai == Complex{}) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += ai * b.coeffs_[j];
  }
  return LaurentSeries(a.offset_ + b.offset_, std::move(out));
}

bool LaurentSeries::almost_equal(const LaurentSeries& other, double tol) const {
  const LaurentSeries d = *this - other;
  for (const auto& c : d.coeffs_)
    if (std::abs(c) > tol) return false;
  return true;
}

}  // namespace zs
