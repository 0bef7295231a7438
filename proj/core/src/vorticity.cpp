#include "wavetraj/vorticity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wavetraj/elliptic.hpp"
#include "wavetraj/irrotational.hpp"
#include "wavetraj/quadrature.hpp"
#include "wavetraj/wave_field.hpp"

namespace wavetraj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kFourPiSq = 4.0 * kPi * kPi;
constexpr double kResidualTarget = 1e-6;
constexpr int kMaxRefinements = 3;

struct PhasePoint {
  double X;
  double V;  // X'
  double L;  // accumulated integral of 2 pi sin X
};

PhasePoint rhs(const PhasePoint& s, double c0) {
  return {s.V, phase_ode_rhs(s.X, c0), kTwoPi * std::sin(s.X)};
}

PhasePoint rk4_step(const PhasePoint& s, double h, double c0) {
  const PhasePoint k1 = rhs(s, c0);
  const PhasePoint s2{s.X + 0.5 * h * k1.X, s.V + 0.5 * h * k1.V, s.L + 0.5 * h * k1.L};
  const PhasePoint k2 = rhs(s2, c0);
  const PhasePoint s3{s.X + 0.5 * h * k2.X, s.V + 0.5 * h * k2.V, s.L + 0.5 * h * k2.L};
  const PhasePoint k3 = rhs(s3, c0);
  const PhasePoint s4{s.X + h * k3.X, s.V + h * k3.V, s.L + h * k3.L};
  const PhasePoint k4 = rhs(s4, c0);
  return {s.X + h / 6.0 * (k1.X + 2.0 * k2.X + 2.0 * k3.X + k4.X),
          s.V + h / 6.0 * (k1.V + 2.0 * k2.V + 2.0 * k3.V + k4.V),
          s.L + h / 6.0 * (k1.L + 2.0 * k2.L + 2.0 * k3.L + k4.L)};
}

}  // namespace

MovingFrameState moving_frame(double x, double z, double t) noexcept {
  return {kTwoPi * (x - t), z};
}

MovingFrameState moving_frame(const TrajectorySample& sample) noexcept {
  return moving_frame(sample.x, sample.z, sample.t);
}

ShearState initial_shear_state(const FlowConfig& config, const ParticleState& init) {
  require_valid(init);
  ShearState s;
  s.y = cot_pi(init.x0);
  const double w = s.y * s.y + 1.0;
  s.yPrime = kPi * (2.0 - (config.shear * init.z0 + config.c0) * w);
  return s;
}

FirstIntegral first_integral(const FlowConfig& config, const ParticleState& init) {
  const ShearState s = initial_shear_state(config, init);
  const double w = s.y * s.y + 1.0;
  FirstIntegral fi;
  fi.C = (s.yPrime * s.yPrime + kFourPiSq * config.c0 * w - kFourPiSq) / (w * w);
  fi.ASquared = fi.C;
  fi.conditionMet = fi.C > kPi * kPi * config.c0 * config.c0;
  if (s.yPrime > 0.0) {
    fi.branchSign = 1;
  } else if (s.yPrime < 0.0) {
    fi.branchSign = -1;
  } else {
    // Turning point at t = 0; take the direction y is about to move in.
    const double ypp = s.y * (kFourPiSq * config.c0 - 2.0 * kFourPiSq / w);
    fi.branchSign = ypp > 0.0 ? 1 : (ypp < 0.0 ? -1 : 0);
    fi.degenerateBranch = fi.branchSign == 0;
  }
  return fi;
}

double phase_ode_rhs(double X, double c0) noexcept {
  return kFourPiSq * std::sin(X) * (1.0 - c0 - std::cos(X));
}

double phase_energy(double X, double Xdot, double c0) noexcept {
  const double s2 = std::sin(0.5 * X) * std::sin(0.5 * X);
  return 0.25 * Xdot * Xdot + kFourPiSq * c0 * s2 - kFourPiSq * s2 * s2;
}

Trajectory integrate_orbit(const FlowConfig& config, const ParticleState& init, double tMax,
                           double dt) {
  require_valid(init);
  if (!(dt > 0.0) || !(tMax > 0.0))
    fail(ErrorCode::InvalidArgument, "tMax and dt must be positive");
  const double c0 = config.c0;
  const double X0 = kTwoPi * init.x0;
  const double V0 = kTwoPi * (std::cos(X0) + config.shear * init.z0 + c0 - 1.0);
  const double C = phase_energy(X0, V0, c0);
  const long nSteps = std::lround(tMax / dt);
  const bool algebraicZ = std::abs(config.shear) > 1e-12;

  for (int refinement = 0; refinement <= kMaxRefinements; ++refinement) {
    const long substeps = 1L << refinement;
    const double h = dt / static_cast<double>(substeps);
    Trajectory traj;
    traj.config = config;
    traj.init = init;
    traj.samples.reserve(static_cast<std::size_t>(nSteps) + 1);
    PhasePoint s{X0, V0, 0.0};
    double maxResidual = 0.0;
    double maxZMismatch = 0.0;
    bool ok = true;
    for (long i = 0; i <= nSteps; ++i) {
      const double t = static_cast<double>(i) * dt;
      const double zQuad = init.z0 * std::exp(s.L);
      double z = zQuad;
      if (algebraicZ) {
        const double zAlg =
            (s.V / kTwoPi - std::cos(s.X) - (c0 - 1.0)) / config.shear;
        maxZMismatch =
            std::max(maxZMismatch, std::abs(zAlg - zQuad) / std::max(1.0, std::abs(zAlg)));
        z = zAlg;
      }
      TrajectorySample sample;
      if (i == 0) {
        const FieldSample f = velocity_field(init.x0, init.z0, 0.0, config);
        sample = {0.0, init.x0, init.z0, f.u, f.v};
      } else {
        sample.t = t;
        sample.x = t + s.X / kTwoPi;
        sample.z = z;
        sample.u = 1.0 + s.V / kTwoPi;
        sample.v = kTwoPi * z * std::sin(s.X);
      }
      traj.samples.push_back(sample);
      maxResidual = std::max(maxResidual, std::abs(phase_energy(s.X, s.V, c0) - C));
      if (maxResidual > kResidualTarget || maxZMismatch > kResidualTarget) {
        ok = false;
        break;
      }
      if (i < nSteps)
        for (long k = 0; k < substeps; ++k) s = rk4_step(s, h, c0);
    }
    if (ok) return traj;
  }
  fail(ErrorCode::StepTooLarge,
       "first-integral residual above 1e-6 even after three step refinements; reduce dt");
}

double orbit_period_quadrature(double C, double c0) {
  if (!(C > kPi * kPi * c0 * c0))
    fail(ErrorCode::ConditionViolated, "period requires C > pi^2 c0^2");
  // y = tan(theta) compactifies the line; the integrand is smooth and positive.
  const auto integrand = [C, c0](double theta) {
    const double cs = std::cos(theta);
    const double c2 = cs * cs;
    return 1.0 / std::sqrt(C - kFourPiSq * c0 * c2 + kFourPiSq * c2 * c2);
  };
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 0.0;
  return 2.0 * integrate(integrand, 0.0, 0.5 * kPi, opts);
}

double orbit_period_elliptic(double C, double c0) {
  const EllipticReduction red = legendre_reduce_general(C, c0);
  return 4.0 * red.prefactor * elliptic_K(red.kSquared);
}

double orbit_period(const FirstIntegral& fi, const FlowConfig& config) {
  if (!fi.conditionMet)
    fail(ErrorCode::ConditionViolated,
         "no single-signed branch: C <= pi^2 c0^2, the sweep period is undefined");
  const double tQuad = orbit_period_quadrature(fi.C, config.c0);
  const double tElliptic = orbit_period_elliptic(fi.C, config.c0);
  if (std::abs(tQuad - tElliptic) > 1e-8 * std::abs(tElliptic))
    fail(ErrorCode::QuadratureFailure, "period routes disagree beyond 1e-8 relative");
  return tElliptic;
}

double drift_per_period(const Trajectory& trajectory, double T) {
  if (trajectory.samples.size() < 2) fail(ErrorCode::EmptyTrajectory, "no samples");
  if (!(T > 0.0)) fail(ErrorCode::InvalidArgument, "period must be positive");
  const double t0 = trajectory.samples.front().t;
  const double target = t0 + T;
  if (trajectory.samples.back().t < target)
    fail(ErrorCode::SpanTooShort, "trajectory spans less than one period");
  // Locate the bracketing samples and interpolate with the stored slopes.
  std::size_t lo = 0, hi = trajectory.samples.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (trajectory.samples[mid].t <= target ? lo : hi) = mid;
  }
  const TrajectorySample& s0 = trajectory.samples[lo];
  const TrajectorySample& s1 = trajectory.samples[hi];
  const double h = s1.t - s0.t;
  double xT = s0.x;
  if (h > 0.0) {
    const double w = (target - s0.t) / h;
    const double h00 = (1.0 + 2.0 * w) * (1.0 - w) * (1.0 - w);
    const double h10 = w * (1.0 - w) * (1.0 - w);
    const double h01 = w * w * (3.0 - 2.0 * w);
    const double h11 = w * w * (w - 1.0);
    xT = h00 * s0.x + h10 * h * s0.u + h01 * s1.x + h11 * h * s1.u;
  }
  return xT - trajectory.samples.front().x;
}

}  // namespace wavetraj
