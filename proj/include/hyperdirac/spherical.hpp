#pragma once

#include "hyperdirac/geometry.hpp"
#include "hyperdirac/specfun.hpp"

namespace hyperdirac {

// Scalar component of the spherical function in even dimension,
//   cosh(s/2) * phi_{2r}^{(n/2-1, n/2)}(s/2).
// Also the shared first term of the odd-dimension components, so no parity
// check is enforced.
cdouble scalar_even(const Geometry& g, double r, double s);

// The four scalar components in odd dimension:
//   pp/mm = A -/+ i b,  pm/mp = A +/- i b, with
//   A = cosh(s/2) phi_{2r}^{(n/2-1,n/2)}(s/2),
//   i b = (2ri/n) sinh(s/2) phi_{2r}^{(n/2,n/2-1)}(s/2).
struct OddComponents {
    cdouble pp, pm, mp, mm;
};

OddComponents scalar_odd(const Geometry& g, double r, double s);

// Ground spherical function phi_0, realized as the lambda = 0 Jacobi function
// for the weight (2 sinh s)^{n-1}, i.e. parameters ((n-2)/2, -1/2).
double ground_spherical(const Geometry& g, double s);

// Relative residual of the identity expressing the second odd-dimension term
// through the derivative of the first: compares
//   (2ri/n) sinh(s/2) phi_{2r}^{(n/2,n/2-1)}(s/2)
// against
//   (n/(2ir)) sinh(s/2) phi(s/2) + (1/ir) cosh(s/2) d/ds phi(s/2),
// phi = phi_{2r}^{(n/2-1,n/2)}, derivative by central differences with step
// h = 1e-5 * max(1, s).
double phi_tilde_identity_residual(const Geometry& g, double r, double s);

// Finite-difference residual of the Jacobi equation
//   v'' + ((n-1) coth s + (n+1) tanh s) v' + (r^2 + n^2) v = 0
// for v = phi_r^{(n/2-1,n/2)}, normalized by max(1, |v|); step h = 1e-4.
double jacobi_ode_residual(const Geometry& g, double r, double s);

} // namespace hyperdirac
