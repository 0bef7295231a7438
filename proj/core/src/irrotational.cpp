#include "wavetraj/irrotational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wavetraj/oracle.hpp"
#include "wavetraj/quadrature.hpp"
#include "wavetraj/wave_field.hpp"

namespace wavetraj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kPhaseTol = 1e-12;

double arccot(double y) { return std::atan2(1.0, y); }  // range (0, pi)

// Index of the tan branch containing alpha; increments at alpha = pi/2 + k pi.
double tan_branch(double alpha) { return std::floor((alpha - 0.5 * kPi) / kPi); }

int sample_count_or_throw(double tMax, int nSamples) {
  if (!(tMax > 0.0)) fail(ErrorCode::InvalidArgument, "tMax must be positive");
  if (nSamples < 2) fail(ErrorCode::InvalidArgument, "need at least two samples");
  return nSamples;
}

}  // namespace

double cot_pi(double x) {
  const double r = x - std::round(x);  // in [-0.5, 0.5]
  if (std::abs(r) < kPhaseTol)
    fail(ErrorCode::DegeneratePhase,
         "cot(pi x) undefined at integer x = " + std::to_string(x) + "; perturb x0");
  if (r == 0.5 || r == -0.5) return 0.0;
  return 1.0 / std::tan(kPi * r);
}

IrrotationalPath IrrotationalPath::zero_current(const ParticleState& init) {
  require_valid(init);
  IrrotationalPath path;
  path.config_ = FlowConfig::irrotational(0.0);
  path.init_ = init;
  path.params_.caseTag = IrrotationalCase::ZeroCurrent;
  path.params_.a = cot_pi(init.x0);
  path.params_.rate = kTwoPi;
  path.params_.phase0 = path.params_.a;
  path.xWhole_ = std::floor(init.x0);
  return path;
}

IrrotationalPath IrrotationalPath::outside_band(const FlowConfig& config,
                                                const ParticleState& init) {
  require_valid(init);
  const double c0 = config.c0;
  if (!(c0 * (c0 - 2.0) > 0.0))
    fail(ErrorCode::InvalidArgument, "outside-band solution requires c0 (c0 - 2) > 0");
  IrrotationalPath path;
  path.config_ = config;
  path.init_ = init;
  path.params_.caseTag = IrrotationalCase::OutsideBand;
  path.params_.a = cot_pi(init.x0);
  path.params_.c0frak = std::sqrt((c0 - 2.0) / c0);
  path.params_.rate = -kPi * c0 * path.params_.c0frak;
  path.params_.phase0 = std::atan(path.params_.a / path.params_.c0frak);
  path.xWhole_ = std::floor(init.x0);
  return path;
}

IrrotationalPath IrrotationalPath::inside_band(const FlowConfig& config,
                                               const ParticleState& init) {
  require_valid(init);
  const double c0 = config.c0;
  if (!(c0 > 0.0 && c0 < 2.0))
    fail(ErrorCode::InvalidArgument, "inside-band solution requires 0 < c0 < 2");
  IrrotationalPath path;
  path.config_ = config;
  path.init_ = init;
  path.params_.caseTag = IrrotationalCase::InsideBand;
  path.params_.a = cot_pi(init.x0);
  path.params_.k0frak = std::sqrt((2.0 - c0) / c0);
  path.params_.rate = kPi * c0 * path.params_.k0frak;
  path.xWhole_ = std::floor(init.x0);
  const double v = path.params_.a / path.params_.k0frak;
  if (std::abs(std::abs(path.params_.a) - path.params_.k0frak) < 1e-12)
    fail(ErrorCode::BranchBoundary,
         "|cot(pi x0)| equals the separatrix value k0frak; perturb x0");
  if (std::abs(v) > 1.0) {
    path.params_.branch = HyperbolicBranch::Coth;
    path.params_.phase0 = 0.5 * std::log((v + 1.0) / (v - 1.0));  // arccoth
  } else {
    path.params_.branch = HyperbolicBranch::Tanh;
    path.params_.phase0 = std::atanh(v);
  }
  return path;
}

double IrrotationalPath::y_of(double t) const {
  const double phase = params_.rate * t + params_.phase0;
  switch (params_.caseTag) {
    case IrrotationalCase::ZeroCurrent:
      return phase;
    case IrrotationalCase::OutsideBand:
      return params_.c0frak * std::tan(phase);
    case IrrotationalCase::InsideBand:
      if (params_.branch == HyperbolicBranch::Coth)
        return params_.k0frak * std::cosh(phase) / std::sinh(phase);
      return params_.k0frak * std::tanh(phase);
  }
  return 0.0;
}

double IrrotationalPath::seam_offset(double t) const {
  switch (params_.caseTag) {
    case IrrotationalCase::ZeroCurrent:
      return 0.0;
    case IrrotationalCase::OutsideBand:
      return tan_branch(params_.phase0) - tan_branch(params_.rate * t + params_.phase0);
    case IrrotationalCase::InsideBand: {
      if (params_.branch != HyperbolicBranch::Coth || params_.phase0 >= 0.0) return 0.0;
      const double tPole = -params_.phase0 / params_.rate;
      return t >= tPole ? 1.0 : 0.0;
    }
  }
  return 0.0;
}

std::vector<double> IrrotationalPath::poles_between(double t0, double t1) const {
  std::vector<double> poles;
  if (params_.caseTag == IrrotationalCase::OutsideBand) {
    const double a0 = params_.rate * t0 + params_.phase0;
    const double a1 = params_.rate * t1 + params_.phase0;
    const double lo = std::min(a0, a1), hi = std::max(a0, a1);
    const long kLo = static_cast<long>(std::ceil((lo - 0.5 * kPi) / kPi));
    const long kHi = static_cast<long>(std::floor((hi - 0.5 * kPi) / kPi));
    for (long k = kLo; k <= kHi; ++k) {
      const double s = (0.5 * kPi + k * kPi - params_.phase0) / params_.rate;
      if (s > t0 && s < t1) poles.push_back(s);
    }
    std::sort(poles.begin(), poles.end());
  } else if (params_.caseTag == IrrotationalCase::InsideBand &&
             params_.branch == HyperbolicBranch::Coth && params_.phase0 < 0.0) {
    const double tPole = -params_.phase0 / params_.rate;
    if (tPole > t0 && tPole < t1) poles.push_back(tPole);
  }
  return poles;
}

double IrrotationalPath::log_height_change(double t0, double t1) const {
  if (params_.caseTag == IrrotationalCase::ZeroCurrent) {
    const double u0 = params_.rate * t0 + params_.phase0;
    const double u1 = params_.rate * t1 + params_.phase0;
    return std::log((1.0 + u1 * u1) / (1.0 + u0 * u0));
  }
  const auto integrand = [this](double s) {
    const double y = y_of(s);
    return 4.0 * kPi * y / (y * y + 1.0);  // = 2 pi sin(X)
  };
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 1e-14;
  const auto poles = poles_between(std::min(t0, t1), std::max(t0, t1));
  return integrate_split(integrand, t0, t1, poles, opts);
}

double IrrotationalPath::x(double t) const {
  return t + arccot(y_of(t)) / kPi + seam_offset(t) + xWhole_;
}

double IrrotationalPath::z(double t) const {
  if (params_.caseTag == IrrotationalCase::ZeroCurrent) {
    const double u = params_.rate * t + params_.phase0;
    const double a = params_.a;
    return init_.z0 * (1.0 + u * u) / (1.0 + a * a);
  }
  return init_.z0 * std::exp(log_height_change(0.0, t));
}

Trajectory IrrotationalPath::sample(double tMax, int nSamples) const {
  sample_count_or_throw(tMax, nSamples);
  Trajectory traj;
  traj.config = config_;
  traj.init = init_;
  traj.samples.reserve(static_cast<std::size_t>(nSamples));
  double logZ = 0.0;
  double tPrev = 0.0;
  const bool closedFormZ = params_.caseTag == IrrotationalCase::ZeroCurrent;
  for (int i = 0; i < nSamples; ++i) {
    const double t = tMax * static_cast<double>(i) / static_cast<double>(nSamples - 1);
    TrajectorySample s;
    s.t = t;
    s.x = x(t);
    if (closedFormZ) {
      s.z = z(t);
    } else {
      if (i > 0) logZ += log_height_change(tPrev, t);
      s.z = init_.z0 * std::exp(logZ);
      tPrev = t;
    }
    const FieldSample f = velocity_field(s.x, s.z, t, config_);
    s.u = f.u;
    s.v = f.v;
    traj.samples.push_back(s);
  }
  return traj;
}

Trajectory trajectory_zero_current(const ParticleState& init, double tMax, int nSamples) {
  auto path = IrrotationalPath::zero_current(init);
  Trajectory traj = path.sample(tMax, nSamples);
  traj.klass = TrajectoryClass::NonPhysicalUnboundedZ;
  traj.label = "zero-current";
  return traj;
}

Trajectory trajectory_outside_band(const FlowConfig& config, const ParticleState& init,
                                   double tMax, int nSamples) {
  auto path = IrrotationalPath::outside_band(config, init);
  Trajectory traj = path.sample(tMax, nSamples);
  const auto cls = classify_irrotational(config.c0);
  traj.klass = cls.klass;
  traj.label = cls.boundary ? "outside-band (boundary c0)" : "outside-band";
  const double c0 = config.c0;
  const double period = 1.0 / std::sqrt(c0 * (c0 - 2.0));
  traj.period = period;
  traj.drift = c0 > 2.0 ? period + 1.0 : period - 1.0;
  return traj;
}

Trajectory trajectory_inside_band(const FlowConfig& config, const ParticleState& init,
                                  double tMax, int nSamples) {
  const double c0 = config.c0;
  if (!(c0 > 0.0 && c0 <= 2.0))
    fail(ErrorCode::InvalidArgument, "inside-band solution requires 0 < c0 <= 2");
  if (std::abs(c0 - 2.0) < 1e-12) {
    // k0frak = 0: both hyperbolic branches collapse. Integrate instead.
    require_valid(init);
    cot_pi(init.x0);  // keep the degenerate-phase contract
    Trajectory traj = integrate_raw(config, init, tMax, 1e-11, nSamples);
    traj.klass = TrajectoryClass::NonPhysicalUnboundedZ;
    traj.label = "inside-band degenerate (c0 = 2)";
    return traj;
  }
  auto path = IrrotationalPath::inside_band(config, init);
  Trajectory traj = path.sample(tMax, nSamples);
  traj.klass = TrajectoryClass::NonPhysicalUnboundedZ;
  traj.label = path.params().branch == HyperbolicBranch::Coth ? "inside-band coth"
                                                              : "inside-band tanh";
  return traj;
}

IrrotationalClassification classify_irrotational(double c0) {
  const bool boundary =
      std::abs(c0) < 1e-12 || std::abs(c0 + 1.0) < 1e-12 || std::abs(c0 - 2.0) < 1e-12;
  if (c0 > 2.0) return {TrajectoryClass::UndulatingRight, boundary};
  if (c0 < -1.0) return {TrajectoryClass::UndulatingLeft, boundary};
  if (c0 < 0.0) return {TrajectoryClass::LoopForwardDrift, boundary};
  return {TrajectoryClass::NonPhysicalUnboundedZ, boundary};
}

}  // namespace wavetraj
