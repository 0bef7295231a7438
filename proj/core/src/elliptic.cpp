#include "wavetraj/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wavetraj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxAgmIterations = 40;

void require_modulus(double m, bool allowOne) {
  if (!(m >= 0.0) || m > 1.0 || (!allowOne && m == 1.0))
    fail(ErrorCode::ModulusOutOfRange,
         "squared modulus " + std::to_string(m) + " outside the admissible range");
}

// Carlson symmetric integral R_F(x, y, z) by the duplication theorem.
double carlson_rf(double x, double y, double z) {
  for (int i = 0; i < kMaxAgmIterations; ++i) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lam = sx * (sy + sz) + sy * sz;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    const double mu = (x + y + z) / 3.0;
    const double eps =
        std::max({std::abs(x - mu), std::abs(y - mu), std::abs(z - mu)}) / mu;
    if (eps < 1e-4) {
      const double dx = (mu - x) / mu, dy = (mu - y) / mu, dz = (mu - z) / mu;
      const double e2 = dx * dy + dy * dz + dz * dx;
      const double e3 = dx * dy * dz;
      return (1.0 + e2 * (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) + e3 / 14.0) / std::sqrt(mu);
    }
  }
  fail(ErrorCode::QuadratureFailure, "Carlson R_F did not converge");
}

}  // namespace

double elliptic_K(double kSquared) {
  require_modulus(kSquared, false);
  double a = 1.0;
  double b = std::sqrt(1.0 - kSquared);
  for (int i = 0; i < kMaxAgmIterations && std::abs(a - b) > 1e-15 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

double elliptic_F(double phi, double kSquared) {
  require_modulus(kSquared, false);
  if (phi == 0.0) return 0.0;
  // Reduce to |phi_r| <= pi/2 and add back whole half-periods.
  const double n = std::round(phi / kPi);
  const double phiR = phi - n * kPi;
  const double s = std::sin(phiR);
  const double c = std::cos(phiR);
  double f = (s == 0.0) ? 0.0 : s * carlson_rf(c * c, 1.0 - kSquared * s * s, 1.0);
  if (n != 0.0) f += 2.0 * n * elliptic_K(kSquared);
  return f;
}

JacobiValues jacobi_elliptic(double u, double kSquared) {
  require_modulus(kSquared, true);
  const double m = kSquared;
  if (u == 0.0) return {0.0, 1.0, 1.0};
  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (m == 1.0) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }
  // Descending AGM chain, then the backward recurrence for the amplitude.
  double a[kMaxAgmIterations + 1], c[kMaxAgmIterations + 1];
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  while (std::abs(c[n]) > 1e-15 * a[n]) {
    if (n >= kMaxAgmIterations)
      fail(ErrorCode::QuadratureFailure, "Jacobi AGM chain did not converge");
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int i = n; i >= 1; --i) {
    const double r = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(r));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = std::sqrt(std::max(0.0, 1.0 - m * sn * sn));
  return {sn, cn, dn};
}

double jacobi_sn(double u, double kSquared) { return jacobi_elliptic(u, kSquared).sn; }
double jacobi_cn(double u, double kSquared) { return jacobi_elliptic(u, kSquared).cn; }
double jacobi_dn(double u, double kSquared) { return jacobi_elliptic(u, kSquared).dn; }

EllipticReduction legendre_reduce_general(double C, double c0) {
  if (!std::isfinite(C) || !std::isfinite(c0))
    fail(ErrorCode::InvalidArgument, "non-finite reduction constants");
  if (!(C > kPi * kPi * c0 * c0))
    fail(ErrorCode::ConditionViolated, "first integral does not satisfy C > pi^2 c0^2");
  const double fourPiSq = 4.0 * kPi * kPi;
  const double E = 1.0 + (fourPiSq - fourPiSq * c0) / C;
  // C * E equals the quartic at y = 0, which the condition keeps positive.
  const double sqrtE = std::sqrt(E);
  EllipticReduction red;
  red.substConst = sqrtE;
  red.kSquared = 0.5 * (1.0 - (C - 2.0 * kPi * kPi * c0) / (C * sqrtE));
  red.prefactor = 1.0 / (2.0 * std::sqrt(C) * std::sqrt(sqrtE));
  return red;
}

EllipticReduction legendre_reduce_zero_current(double A) {
  const double A2 = A * A;
  if (!(A2 > 0.0) || !std::isfinite(A2))
    fail(ErrorCode::DegenerateConstant, "zero-current reduction requires A != 0");
  return legendre_reduce_general(A2, 0.0);
}

double reduction_angle(const EllipticReduction& red, double y) {
  if (y < 0.0) fail(ErrorCode::InvalidArgument, "reduction angle is defined for y >= 0");
  return 2.0 * std::atan(y / std::sqrt(red.substConst));
}

}  // namespace wavetraj
