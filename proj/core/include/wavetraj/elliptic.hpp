#ifndef WAVETRAJ_ELLIPTIC_HPP
#define WAVETRAJ_ELLIPTIC_HPP

#include "wavetraj/types.hpp"

namespace wavetraj {

/// Complete elliptic integral of the first kind K(k), parametrized by the
/// squared modulus m = k^2 in [0, 1). Computed by the arithmetic-geometric
/// mean; relative accuracy a few ulp.
double elliptic_K(double kSquared);

/// Incomplete elliptic integral of the first kind
///   F(phi, k) = integral_0^phi dtheta / sqrt(1 - k^2 sin^2 theta)
/// for any real phi, with m = k^2 in [0, 1). Odd in phi and additive across
/// half periods: F(phi + pi, k) = F(phi, k) + 2 K(k).
double elliptic_F(double phi, double kSquared);

struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

/// Jacobi elliptic functions sn, cn, dn of argument u with m = k^2 in
/// [0, 1]. Degenerate moduli reduce to trigonometric (m = 0) and hyperbolic
/// (m = 1) functions.
JacobiValues jacobi_elliptic(double u, double kSquared);

double jacobi_sn(double u, double kSquared);
double jacobi_cn(double u, double kSquared);
double jacobi_dn(double u, double kSquared);

/// Reduction of the trajectory quartic integral
///   integral dy / sqrt(C (y^2+1)^2 - 4 pi^2 c0 (y^2+1) + 4 pi^2)
/// to Legendre normal form. With E = 1 + (4 pi^2 - 4 pi^2 c0) / C:
///   substConst = sqrt(E)            (the w = substConst * tan^2(phi/2) map)
///   kSquared   = (1 - (C - 2 pi^2 c0) / (C sqrt(E))) / 2
///   prefactor  = 1 / (2 sqrt(C) E^(1/4))
/// so that for y >= 0
///   integral_0^y ds / sqrt(quartic(s)) = prefactor * F(angle(y), k),
/// with angle(y) = 2 atan(y / E^(1/4)). The prefactor exponent comes from
/// re-deriving the substitution; it is pinned by the numerical reduction
/// checks in the test suite.
struct EllipticReduction {
  double kSquared;
  double prefactor;
  double substConst;
};

/// Reduction for the zero-current first integral (y')^2 = A^2 (y^2+1)^2 + 4 pi^2.
/// Throws DegenerateConstant if A == 0.
EllipticReduction legendre_reduce_zero_current(double A);

/// General reduction; requires C > pi^2 c0^2 (ConditionViolated otherwise).
/// Coincides with legendre_reduce_zero_current when c0 = 0 and C = A^2.
EllipticReduction legendre_reduce_general(double C, double c0);

/// The angle phi(y) of the Legendre substitution, for y >= 0.
double reduction_angle(const EllipticReduction& red, double y);

}  // namespace wavetraj

#endif
