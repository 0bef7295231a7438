#ifndef WAVETRAJ_VORTICITY_HPP
#define WAVETRAJ_VORTICITY_HPP

#include "wavetraj/types.hpp"

namespace wavetraj {

/// Wave-following coordinates X = 2 pi (x - t), Z = z.
struct MovingFrameState {
  double X = 0.0;
  double Z = 0.0;
};

MovingFrameState moving_frame(double x, double z, double t) noexcept;
MovingFrameState moving_frame(const TrajectorySample& sample) noexcept;

/// The cotangent substitution y = cot(X/2) and its rate.
struct ShearState {
  double y = 0.0;
  double yPrime = 0.0;
};

/// Conserved constant of the reduced equation
///   (y')^2 = C (y^2+1)^2 - 4 pi^2 c0 (y^2+1) + 4 pi^2.
/// conditionMet (C > pi^2 c0^2) makes the right-hand side positive for every
/// y, so y' keeps one sign and y sweeps the whole line each period.
struct FirstIntegral {
  double C = 0.0;
  int branchSign = 0;         ///< sign of y' along the orbit (+1 / -1)
  bool conditionMet = false;  ///< C > pi^2 c0^2
  double ASquared = 0.0;      ///< alias of C; the A^2 of the zero-current case
  bool degenerateBranch = false;  ///< y'(0) = 0 and y''(0) = 0
};

/// State of the substitution variable at t = 0:
///   y(0)  = cot(pi x0)
///   y'(0) = pi [2 - (shear z0 + c0)(cot^2(pi x0) + 1)].
/// Throws DegeneratePhase for integer x0.
ShearState initial_shear_state(const FlowConfig& config, const ParticleState& init);

/// Solves the defining relation for C at t = 0:
///   C = [y'(0)^2 + 4 pi^2 c0 (y0^2+1) - 4 pi^2] / (y0^2+1)^2.
/// A branch sign of 0 with degenerateBranch unset means y'(0) = 0 was
/// resolved through y''(0).
FirstIntegral first_integral(const FlowConfig& config, const ParticleState& init);

/// The autonomous phase acceleration X'' = 4 pi^2 sin(X) (1 - c0 - cos X).
/// The shear enters orbits only through X'(0).
double phase_ode_rhs(double X, double c0) noexcept;

/// Fixed-step RK4 integration of the phase equation, sampled every dt up to
/// tMax. The height is reconstructed algebraically from (X, X') when the
/// shear is nonzero and from the exponential quadrature otherwise; the two
/// routes are cross-checked where both exist. The step is halved (up to
/// three times) until the first-integral residual over the run is below
/// 1e-6; StepTooLarge if that fails.
Trajectory integrate_orbit(const FlowConfig& config, const ParticleState& init, double tMax,
                           double dt);

/// Time for y to sweep the real line once (equivalently, for X to advance by
/// 2 pi). Computed by compactified adaptive quadrature and through the
/// Legendre reduction; the routes must agree to 1e-8 relative. Requires
/// conditionMet.
double orbit_period(const FirstIntegral& fi, const FlowConfig& config);
double orbit_period_quadrature(double C, double c0);
double orbit_period_elliptic(double C, double c0);

/// x(t0 + T) - x(t0) from a sampled trajectory (cubic interpolation between
/// samples). SpanTooShort if the trajectory covers less than one period.
double drift_per_period(const Trajectory& trajectory, double T);

/// The conserved energy-like form of the first integral,
///   E(X, X') = (X'/2)^2 + 4 pi^2 c0 sin^2(X/2) - 4 pi^2 sin^4(X/2),
/// which equals C on the orbit and stays finite across the poles of y.
double phase_energy(double X, double Xdot, double c0) noexcept;

}  // namespace wavetraj

#endif
