#include "zspulse/marchenko.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <stdexcept>

namespace zs {

namespace {

Eigen::MatrixXcd assemble(const LaurentSeries& kernel, std::size_t n) {
  if (!kernel.is_zero() && kernel.max_index() > -1)
    throw std::invalid_argument("Marchenko kernel must have negative support only");
  const std::int64_t nn = static_cast<std::int64_t>(n);

  // With G[m, q] = kernel(m - q) for m <= -1, the operator I + G^H G has
  // entries (q >= p, d = q - p):
  //   T[q, p] = sum_{i <= -1-q} conj(k(i)) k(i + d),
  // a truncated autocorrelation; peeling one term per row keeps the
  // assembly at O(n^2) instead of O(n^2 L).
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Identity(nn, nn);
  for (std::int64_t d = 0; d < nn; ++d) {
    Complex p{};
    for (std::int64_t i = kernel.min_index(); i <= -1; ++i)
      p += std::conj(kernel.coeff(i)) * kernel.coeff(i + d);
    for (std::int64_t q = 1; q <= nn; ++q) {
      p -= std::conj(kernel.coeff(-q)) * kernel.coeff(d - q);
      if (q - d >= 1) {
        T(q - 1, q - d - 1) += p;
        if (d != 0) T(q - d - 1, q - 1) += std::conj(p);
      }
    }
  }
  return T;
}

}  // namespace

MarchenkoSolution marchenko_solve(const LaurentSeries& kernel, std::size_t n) {
  MarchenkoSolution sol;
  if (kernel.is_zero() || n == 0) return sol;
  if (n < kernel.support_width())
    throw std::invalid_argument("Marchenko truncation below kernel support width");

  const std::int64_t nn = static_cast<std::int64_t>(n);
  Eigen::VectorXcd rhs(nn);
  for (std::int64_t q = 1; q <= nn; ++q)
    rhs(q - 1) = -std::conj(kernel.coeff(-q));

  const Eigen::MatrixXcd T = assemble(kernel, n);
  Eigen::LLT<Eigen::MatrixXcd> llt(T);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("Marchenko system lost positive definiteness");
  Eigen::VectorXcd h = llt.solve(rhs);
  sol.residual = (T * h - rhs).norm();

  CVector coeffs(n);
  for (std::int64_t q = 1; q <= nn; ++q) coeffs[q - 1] = h(q - 1);
  sol.h = LaurentSeries(1, std::move(coeffs));
  return sol;
}

Complex gamma_from_marchenko(const MarchenkoSolution& sol) {
  return sol.h.coeff(1);
}

double marchenko_min_eigenvalue(const LaurentSeries& kernel, std::size_t n) {
  if (kernel.is_zero() || n == 0) return 1.0;
  const Eigen::MatrixXcd T = assemble(kernel, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      0.5 * (T + T.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace zs
