#pragma once

#include "zspulse/types.hpp"

namespace zs {

// Dense complex polynomials, coeffs[i] = coefficient of w^i.
namespace poly {

CVector trimmed(CVector p, double rel_tol = 0.0);
int degree(const CVector& p);  // -1 for the zero polynomial
Complex eval(const CVector& p, Complex w);
CVector derivative(const CVector& p);
CVector multiply(const CVector& a, const CVector& b);

// All roots via the companion-matrix eigenvalues (balanced, complex Schur).
CVector roots(const CVector& p);

}  // namespace poly

}  // namespace zs
