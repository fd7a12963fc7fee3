#pragma once

#include "zspulse/laurent.hpp"
#include "zspulse/types.hpp"

namespace zs {

// Values of a function on the uniform circle grid w_k = e^{2 pi i k / N},
// N a power of two. The evaluation grid for everything that is not exact
// coefficient arithmetic.
class CircleGrid {
 public:
  CircleGrid() = default;
  explicit CircleGrid(CVector values);
  static CircleGrid constant(std::size_t n, Complex c);

  std::size_t size() const { return values_.size(); }
  Complex point(std::size_t k) const;          // w_k on the unit circle
  double angle(std::size_t k) const;           // 2 pi k / N
  const CVector& values() const { return values_; }
  CVector& values() { return values_; }
  Complex operator[](std::size_t k) const { return values_[k]; }

  // Fourier coefficients indexed in [-N/2, N/2); exact inverse of sample()
  // whenever the grid resolves the support.
  LaurentSeries to_series(double drop_tol = 0.0) const;

  CircleGrid pointwise_conj() const;

  friend CircleGrid operator+(const CircleGrid& a, const CircleGrid& b);
  friend CircleGrid operator-(const CircleGrid& a, const CircleGrid& b);
  friend CircleGrid operator*(const CircleGrid& a, const CircleGrid& b);
  friend CircleGrid operator/(const CircleGrid& a, const CircleGrid& b);

 private:
  CVector values_;
};

// Evaluate f on the N-point grid via FFT. Requires n >= support width of f
// (aliasing otherwise) and n a power of two.
CircleGrid sample(const LaurentSeries& f, std::size_t n);

}  // namespace zs
