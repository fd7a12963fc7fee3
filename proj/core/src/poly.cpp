#include "zspulse/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace zs {
namespace poly {

CVector trimmed(CVector p, double rel_tol) {
  double maxmag = 0.0;
  for (const auto& c : p) maxmag = std::max(maxmag, std::abs(c));
  const double cut = maxmag * rel_tol;
  while (!p.empty() && std::abs(p.back()) <= cut) p.pop_back();
  return p;
}

int degree(const CVector& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != Complex{}) return static_cast<int>(i);
  return -1;
}

Complex eval(const CVector& p, Complex w) {
  Complex acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * w + p[i];
  return acc;
}

CVector derivative(const CVector& p) {
  if (p.size() <= 1) return {};
  CVector d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i)
    d[i - 1] = p[i] * static_cast<double>(i);
  return d;
}

CVector multiply(const CVector& a, const CVector& b) {
  if (a.empty() || b.empty()) return {};
  CVector out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Complex{}) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

CVector roots(const CVector& p_in) {
  CVector p = trimmed(p_in, 0.0);
  const int n = degree(p);
  if (n <= 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  const Complex lead = p[static_cast<std::size_t>(n)];
  for (int i = 0; i < n; ++i)
    companion(i, n - 1) = -p[static_cast<std::size_t>(i)] / lead;
  for (int i = 1; i < n; ++i) companion(i, i - 1) = Complex{1.0, 0.0};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("companion eigenvalue iteration failed");
  CVector out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

}  // namespace poly
}  // namespace zs
