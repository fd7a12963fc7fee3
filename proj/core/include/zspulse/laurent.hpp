#pragma once

#include <cstdint>

#include "zspulse/types.hpp"

namespace zs {

// Finitely supported two-sided coefficient sequence representing
//   f(w) = sum_n  coeff(n) w^n   on the unit circle.
// Stored as the first populated index plus a dense coefficient run.
// Instances are immutable values; all operations return new series.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(std::int64_t offset, CVector coeffs);

  static LaurentSeries zero() { return {}; }
  static LaurentSeries constant(Complex c);
  static LaurentSeries monomial(std::int64_t n, Complex c = 1.0);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_index() const { return offset_; }
  std::int64_t max_index() const {
    return offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  std::size_t support_width() const { return coeffs_.size(); }

  Complex coeff(std::int64_t n) const;
  const CVector& raw_coeffs() const { return coeffs_; }

  // f(w0) by direct summation; w0 != 0 when negative indices are present.
  Complex evaluate(Complex w0) const;

  LaurentSeries shifted(std::int64_t k) const;     // w^k * f
  LaurentSeries scaled(Complex c) const;
  // f*(w) = conj(f(1/conj(w))): index negation plus coefficient conjugation.
  LaurentSeries conj_reflected() const;

  // Pi+ f = sum_{n>=1}, Pi- f = sum_{n<=-1}; the tilde variants carry half of
  // the zeroth coefficient.
  LaurentSeries project_plus() const;
  LaurentSeries project_minus() const;
  LaurentSeries project_plus_tilde() const;
  LaurentSeries project_minus_tilde() const;

  double h1_norm() const;   // sqrt(sum (1+n^2) |f_n|^2)
  double l2_norm() const;
  double abs_sum() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  bool almost_equal(const LaurentSeries& other, double tol) const;

 private:
  void trim();

  std::int64_t offset_ = 0;
  CVector coeffs_;  // coefficient of w^(offset_+i) at position i
};

}  // namespace zs
