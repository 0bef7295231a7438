#ifndef WAVETRAJ_IRROTATIONAL_HPP
#define WAVETRAJ_IRROTATIONAL_HPP

#include "wavetraj/types.hpp"

namespace wavetraj {

/// cot(pi x), reduced so that half-integer x gives exactly 0. Throws
/// DegeneratePhase when x is within 1e-12 of an integer (the cotangent
/// pole); callers are expected to perturb the initial abscissa instead.
double cot_pi(double x);

enum class IrrotationalCase { ZeroCurrent, OutsideBand, InsideBand };

enum class HyperbolicBranch { None, Tanh, Coth };

/// Constants of the closed-form solutions for an irrotational flow.
///
/// The phase argument is linear in time in all three sub-cases:
///   alpha(t) = rate * t + phase0   (OutsideBand, rate = -pi c0 c0frak)
///   beta(t)  = rate * t + phase0   (InsideBand,  rate =  pi c0 k0frak)
/// phase0 is fixed by the initial abscissa so that x(0) = x0 holds exactly;
/// `a` records cot(pi x0) itself.
struct IrrotationalCaseParams {
  IrrotationalCase caseTag = IrrotationalCase::ZeroCurrent;
  double a = 0.0;       ///< cot(pi x0)
  double c0frak = 0.0;  ///< sqrt((c0-2)/c0), OutsideBand only
  double k0frak = 0.0;  ///< sqrt((2-c0)/c0), InsideBand only
  double rate = 0.0;
  double phase0 = 0.0;
  HyperbolicBranch branch = HyperbolicBranch::None;
};

/// Pointwise closed-form particle path for the irrotational cases. The
/// abscissa is continued across every branch seam of the underlying
/// cotangent parametrization, so x(t) is continuous and x(0) = x0 exactly.
class IrrotationalPath {
 public:
  static IrrotationalPath zero_current(const ParticleState& init);
  static IrrotationalPath outside_band(const FlowConfig& config, const ParticleState& init);
  static IrrotationalPath inside_band(const FlowConfig& config, const ParticleState& init);

  double x(double t) const;
  double z(double t) const;
  /// ln(z(t1) / z(t0)) along the path. Closed form in the zero-current case,
  /// adaptive quadrature of 4 pi y / (y^2 + 1) otherwise.
  double log_height_change(double t0, double t1) const;
  /// Uniform samples on [0, tMax]; velocities from the linearized field.
  Trajectory sample(double tMax, int nSamples) const;

  const IrrotationalCaseParams& params() const noexcept { return params_; }
  const FlowConfig& config() const noexcept { return config_; }

 private:
  IrrotationalPath() = default;

  double y_of(double t) const;         // cot(X/2) along the path
  double seam_offset(double t) const;  // whole waves gained across poles
  std::vector<double> poles_between(double t0, double t1) const;

  FlowConfig config_;
  ParticleState init_;
  IrrotationalCaseParams params_;
  double xWhole_ = 0.0;  // floor(x0); the arccot form only yields frac(x0)
};

/// Exact solution for c0 = 0:
///   x(t) = t + arccot(2 pi t + a) / pi,  z(t) = z0 [1 + (2 pi t + a)^2] / (1 + a^2).
/// The height grows without bound, so the class is NonPhysicalUnboundedZ.
Trajectory trajectory_zero_current(const ParticleState& init, double tMax, int nSamples);

/// Exact solution for c0 (c0 - 2) > 0; height by adaptive quadrature of the
/// stated integrand. Period and drift metadata are exact:
///   T = 1 / sqrt(c0^2 - 2 c0),  drift = T + 1 (c0 > 2) or T - 1 (c0 < 0).
Trajectory trajectory_outside_band(const FlowConfig& config, const ParticleState& init,
                                   double tMax, int nSamples);

/// Exact solution for 0 < c0 <= 2. The hyperbolic branch is selected at
/// t = 0 from |cot(pi x0)| versus k0frak and is invariant under the flow;
/// exactly-critical initial data throws BranchBoundary. c0 = 2 degenerates
/// (k0frak = 0) and falls back to the adaptive integrator, labelled
/// "DegenerateCase".
Trajectory trajectory_inside_band(const FlowConfig& config, const ParticleState& init,
                                  double tMax, int nSamples);

struct IrrotationalClassification {
  TrajectoryClass klass;
  bool boundary;  ///< c0 sits on a threshold {-1, 0, 2}; confirm empirically
};

/// The current-strength taxonomy for shear-free flow:
///   c0 > 2 undulating right; c0 < -1 undulating left; -1 <= c0 < 0 loops
///   with a forward excursion; 0 <= c0 <= 2 unbounded height.
IrrotationalClassification classify_irrotational(double c0);

}  // namespace wavetraj

#endif
