#ifndef WAVETRAJ_TYPES_HPP
#define WAVETRAJ_TYPES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavetraj {

/// Shape taxonomy of particle paths beneath the travelling wave.
///
/// The loop classes are named after the orientation of the fast excursion a
/// particle makes while the wave crest passes overhead (forward = with the
/// wave). The net displacement per period is reported separately, as its
/// sign is an independent quantity.
enum class TrajectoryClass {
  UndulatingRight,
  UndulatingLeft,
  LoopForwardDrift,
  LoopBackwardDrift,
  Peculiar,
  NonPhysicalUnboundedZ,
  NumericalFallback,
};

const char* to_string(TrajectoryClass c) noexcept;
std::optional<TrajectoryClass> trajectory_class_from_string(const std::string& s) noexcept;

enum class ErrorCode {
  InvalidArgument,
  DegeneratePhase,
  DegenerateConstant,
  DegenerateBranch,
  BranchBoundary,
  ModulusOutOfRange,
  ConditionViolated,
  QuadratureFailure,
  StepTooLarge,
  ToleranceNotMet,
  SpanTooShort,
  PeriodNotFound,
  EmptyTrajectory,
};

const char* to_string(ErrorCode c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

/// Flow parameters. All trajectory computations run in the nondimensional
/// variables; physical vorticity enters only through the shear coefficient
///   shear = omega0 * sqrt(g * h0) / g.
struct FlowConfig {
  double c0 = 0.0;      ///< underlying current strength (dimensionless)
  double omega0 = 0.0;  ///< vorticity [1/time]
  double g = 9.81;      ///< gravitational acceleration [length/time^2]
  double h0 = 1.0;      ///< undisturbed depth [length]
  double shear = 0.0;   ///< dimensionless shear coefficient

  static FlowConfig irrotational(double c0);
  /// Specify the shear coefficient directly; omega0 is back-filled so the
  /// defining relation holds.
  static FlowConfig with_shear(double c0, double shear, double g = 9.81, double h0 = 1.0);
  /// Specify physical vorticity; the shear coefficient is derived once here.
  static FlowConfig physical(double c0, double omega0, double g, double h0);

  bool rotational() const noexcept { return shear != 0.0; }
};

/// Initial particle position. The fluid column is 0 < z <= 1 in
/// nondimensional variables; heights above 1 can still occur along computed
/// paths (the linearized model does not confine them), but initial data must
/// start inside the column.
struct ParticleState {
  double x0 = 0.5;
  double z0 = 0.5;
};

/// Throws InvalidArgument unless 0 < z0 <= 1.
void require_valid(const ParticleState& p);

/// Linearized field quantities at one point. Pressure equals the surface
/// elevation at every depth.
struct FieldSample {
  double eta = 0.0;
  double p = 0.0;
  double u = 0.0;
  double v = 0.0;
};

struct TrajectorySample {
  double t = 0.0;
  double x = 0.0;
  double z = 0.0;
  double u = 0.0;
  double v = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  FlowConfig config;
  ParticleState init;
  std::optional<TrajectoryClass> klass;
  std::optional<double> period;
  std::optional<double> drift;
  std::string label;  ///< sub-case / branch annotation
};

}  // namespace wavetraj

#endif
