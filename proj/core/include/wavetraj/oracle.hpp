#ifndef WAVETRAJ_ORACLE_HPP
#define WAVETRAJ_ORACLE_HPP

#include <span>

#include "wavetraj/types.hpp"

namespace wavetraj {

/// Adaptive Dormand-Prince 4(5) integration of the raw particle system
///   dx/dt = cos(2 pi (x-t)) + shear z + c0,   dz/dt = 2 pi z sin(2 pi (x-t)),
/// carried out in extended precision so the result can serve as a reference
/// for the closed forms. Samples are produced at the requested times by
/// landing integration steps on them exactly. Throws ToleranceNotMet if the
/// controller cannot reach the local error target.
Trajectory integrate_raw(const FlowConfig& config, const ParticleState& init, double tMax,
                         double tol, int nSamples);

/// Same, with caller-chosen sample times (strictly increasing, starting at 0).
Trajectory integrate_raw_at(const FlowConfig& config, const ParticleState& init,
                            std::span<const double> times, double tol);

/// Flow the raw system from (x, z) at time t0 to time t1 (either direction).
struct PointState {
  double x;
  double z;
};
PointState flow_raw(const FlowConfig& config, PointState start, double t0, double t1,
                    double tol);

/// Orbit shape measured from samples alone, with no use of the closed forms:
/// height maxima give the period, the sign pattern of u = dx/dt over one
/// period separates undulation (0 sign changes), simple loops (2) and the
/// doubled-loop pattern (4+), and the sign of u at the height maxima fixes a
/// loop's orientation. Net drift per period is reported as data; for loops
/// its sign is not tied to the orientation of the fast excursion.
struct EmpiricalClassification {
  TrajectoryClass klass = TrajectoryClass::NumericalFallback;
  int driftSign = 0;
  bool loopDetected = false;  ///< the (x, z) polyline self-intersects within a period
  bool monotoneX = false;
  bool zBounded = true;
  bool periodFound = false;
  int xSignChanges = 0;
  int crestSign = 0;  ///< sign of u while the height passes its maxima
  std::optional<double> period;
  std::optional<double> drift;
};

/// Classify a sampled trajectory. The trajectory should span at least three
/// periods (SpanTooShort for fewer than a handful of samples); if no
/// periodicity is detectable only the boundedness/drift flags are filled in.
EmpiricalClassification classify_empirical(const Trajectory& trajectory);

}  // namespace wavetraj

#endif
