#pragma once

#include "zspulse/laurent.hpp"
#include "zspulse/types.hpp"

namespace zs {

// Truncated linear-system solver for the projected equation
//   (1 + Pi+ k* Pi- k) h = -Pi+ k*,
// where the kernel k has only negative-index coefficients and the unknown h
// is sought on coefficient indices 1..n. The operator is the identity plus a
// Gram matrix, hence Hermitian positive definite; solved by Cholesky.
// Independent of the recursion path it cross-checks.
struct MarchenkoSolution {
  LaurentSeries h;
  double residual = 0.0;
};

MarchenkoSolution marchenko_solve(const LaurentSeries& kernel, std::size_t n);

// gamma from the right solution h = w conj(B+)/A+(0): the w^1 coefficient.
Complex gamma_from_marchenko(const MarchenkoSolution& sol);

// Smallest eigenvalue of the symmetrized truncated operator (>= 1 in exact
// arithmetic); exposed for the positivity property test.
double marchenko_min_eigenvalue(const LaurentSeries& kernel, std::size_t n);

}  // namespace zs
