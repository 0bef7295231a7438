#include "wavetraj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "wavetraj/wave_field.hpp"

namespace wavetraj {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr long double kTwoPiL = 2.0L * kPiL;

struct RawState {
  long double x;
  long double z;
};

struct RawDeriv {
  long double dx;
  long double dz;
};

RawDeriv raw_rhs(long double t, const RawState& s, long double shear, long double c0) {
  const long double X = kTwoPiL * (s.x - t);
  return {std::cos(X) + shear * s.z + c0, kTwoPiL * s.z * std::sin(X)};
}

// Dormand-Prince 5(4) pair, FSAL form.
constexpr long double kA21 = 1.0L / 5;
constexpr long double kA31 = 3.0L / 40, kA32 = 9.0L / 40;
constexpr long double kA41 = 44.0L / 45, kA42 = -56.0L / 15, kA43 = 32.0L / 9;
constexpr long double kA51 = 19372.0L / 6561, kA52 = -25360.0L / 2187,
                      kA53 = 64448.0L / 6561, kA54 = -212.0L / 729;
constexpr long double kA61 = 9017.0L / 3168, kA62 = -355.0L / 33, kA63 = 46732.0L / 5247,
                      kA64 = 49.0L / 176, kA65 = -5103.0L / 18656;
constexpr long double kB1 = 35.0L / 384, kB3 = 500.0L / 1113, kB4 = 125.0L / 192,
                      kB5 = -2187.0L / 6784, kB6 = 11.0L / 84;
constexpr long double kE1 = 71.0L / 57600, kE3 = -71.0L / 16695, kE4 = 71.0L / 1920,
                      kE5 = -17253.0L / 339200, kE6 = 22.0L / 525, kE7 = -1.0L / 40;

class RawIntegrator {
 public:
  RawIntegrator(const FlowConfig& config, double tol)
      : shear_(config.shear), c0_(config.c0), tol_(tol) {
    if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  }

  /// Advance state from t0 to t1 (either direction), adapting the step and
  /// landing exactly on t1.
  RawState advance(RawState s, long double t0, long double t1) {
    if (t1 == t0) return s;
    const long double dir = t1 > t0 ? 1.0L : -1.0L;
    long double t = t0;
    long double h = dir * std::min<long double>(std::abs(t1 - t0), 1e-3L);
    RawDeriv k1 = raw_rhs(t, s, shear_, c0_);
    long steps = 0;
    while (dir * (t1 - t) > 0.0L) {
      if (++steps > 40'000'000L)
        fail(ErrorCode::ToleranceNotMet, "step budget exhausted in the reference integrator");
      if (dir * (t + h - t1) > 0.0L) h = t1 - t;
      const RawState s2{s.x + h * kA21 * k1.dx, s.z + h * kA21 * k1.dz};
      const RawDeriv k2 = raw_rhs(t + h / 5, s2, shear_, c0_);
      const RawState s3{s.x + h * (kA31 * k1.dx + kA32 * k2.dx),
                        s.z + h * (kA31 * k1.dz + kA32 * k2.dz)};
      const RawDeriv k3 = raw_rhs(t + 3 * h / 10, s3, shear_, c0_);
      const RawState s4{s.x + h * (kA41 * k1.dx + kA42 * k2.dx + kA43 * k3.dx),
                        s.z + h * (kA41 * k1.dz + kA42 * k2.dz + kA43 * k3.dz)};
      const RawDeriv k4 = raw_rhs(t + 4 * h / 5, s4, shear_, c0_);
      const RawState s5{
          s.x + h * (kA51 * k1.dx + kA52 * k2.dx + kA53 * k3.dx + kA54 * k4.dx),
          s.z + h * (kA51 * k1.dz + kA52 * k2.dz + kA53 * k3.dz + kA54 * k4.dz)};
      const RawDeriv k5 = raw_rhs(t + 8 * h / 9, s5, shear_, c0_);
      const RawState s6{s.x + h * (kA61 * k1.dx + kA62 * k2.dx + kA63 * k3.dx +
                                   kA64 * k4.dx + kA65 * k5.dx),
                        s.z + h * (kA61 * k1.dz + kA62 * k2.dz + kA63 * k3.dz +
                                   kA64 * k4.dz + kA65 * k5.dz)};
      const RawDeriv k6 = raw_rhs(t + h, s6, shear_, c0_);
      const RawState s7{
          s.x + h * (kB1 * k1.dx + kB3 * k3.dx + kB4 * k4.dx + kB5 * k5.dx + kB6 * k6.dx),
          s.z + h * (kB1 * k1.dz + kB3 * k3.dz + kB4 * k4.dz + kB5 * k5.dz + kB6 * k6.dz)};
      const RawDeriv k7 = raw_rhs(t + h, s7, shear_, c0_);

      const long double errX = h * (kE1 * k1.dx + kE3 * k3.dx + kE4 * k4.dx +
                                    kE5 * k5.dx + kE6 * k6.dx + kE7 * k7.dx);
      const long double errZ = h * (kE1 * k1.dz + kE3 * k3.dz + kE4 * k4.dz +
                                    kE5 * k5.dz + kE6 * k6.dz + kE7 * k7.dz);
      const long double scaleX =
          tol_ + tol_ * std::max(std::abs(s.x), std::abs(s7.x));
      const long double scaleZ =
          tol_ + tol_ * std::max(std::abs(s.z), std::abs(s7.z));
      // Error-per-unit-time control keeps the accumulated error near tol
      // over order-one horizons.
      const long double err = std::max(std::abs(errX) / scaleX, std::abs(errZ) / scaleZ) /
                              std::abs(h);
      if (err <= 1.0L) {
        t += h;
        s = s7;
        k1 = k7;  // first-same-as-last
      }
      const long double grow =
          err <= 0.0L ? 5.0L
                      : std::clamp(0.9L * std::pow(err, -0.25L), 0.2L, 5.0L);
      h *= grow;
      if (std::abs(h) < 1e-15L * std::max<long double>(1.0L, std::abs(t)))
        fail(ErrorCode::ToleranceNotMet, "step size underflow in the reference integrator");
    }
    return s;
  }

 private:
  long double shear_;
  long double c0_;
  double tol_;
};

TrajectorySample make_sample(const FlowConfig& config, double t, const RawState& s) {
  TrajectorySample out;
  out.t = t;
  out.x = static_cast<double>(s.x);
  out.z = static_cast<double>(s.z);
  const FieldSample f = velocity_field(out.x, out.z, t, config);
  out.u = f.u;
  out.v = f.v;
  return out;
}

bool segments_cross(double ax, double ay, double bx, double by, double cx, double cy,
                    double dx, double dy) {
  const double ux = bx - ax, uy = by - ay;
  const double vx = dx - cx, vy = dy - cy;
  const double denom = ux * vy - uy * vx;
  const double nu = std::hypot(ux, uy), nv = std::hypot(vx, vy);
  if (nu == 0.0 || nv == 0.0) return false;
  if (std::abs(denom) <= 1e-6 * nu * nv) return false;  // near-tangent crossing
  const double s = ((cx - ax) * vy - (cy - ay) * vx) / denom;
  const double r = ((cx - ax) * uy - (cy - ay) * ux) / denom;
  return s > 0.0 && s < 1.0 && r > 0.0 && r < 1.0;
}

}  // namespace

Trajectory integrate_raw_at(const FlowConfig& config, const ParticleState& init,
                            std::span<const double> times, double tol) {
  require_valid(init);
  if (times.empty()) fail(ErrorCode::InvalidArgument, "no sample times");
  if (times.front() != 0.0)
    fail(ErrorCode::InvalidArgument, "sample times must start at t = 0");
  Trajectory traj;
  traj.config = config;
  traj.init = init;
  traj.samples.reserve(times.size());
  RawIntegrator integrator(config, tol);
  RawState s{init.x0, init.z0};
  double tPrev = 0.0;
  traj.samples.push_back(make_sample(config, 0.0, s));
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double t = times[i];
    if (!(t > tPrev)) fail(ErrorCode::InvalidArgument, "sample times must increase");
    s = integrator.advance(s, tPrev, t);
    traj.samples.push_back(make_sample(config, t, s));
    tPrev = t;
  }
  return traj;
}

Trajectory integrate_raw(const FlowConfig& config, const ParticleState& init, double tMax,
                         double tol, int nSamples) {
  if (!(tMax > 0.0)) fail(ErrorCode::InvalidArgument, "tMax must be positive");
  if (nSamples < 2) fail(ErrorCode::InvalidArgument, "need at least two samples");
  std::vector<double> times(static_cast<std::size_t>(nSamples));
  for (int i = 0; i < nSamples; ++i)
    times[static_cast<std::size_t>(i)] =
        tMax * static_cast<double>(i) / static_cast<double>(nSamples - 1);
  return integrate_raw_at(config, init, times, tol);
}

PointState flow_raw(const FlowConfig& config, PointState start, double t0, double t1,
                    double tol) {
  RawIntegrator integrator(config, tol);
  const RawState s = integrator.advance({start.x, start.z}, t0, t1);
  return {static_cast<double>(s.x), static_cast<double>(s.z)};
}

EmpiricalClassification classify_empirical(const Trajectory& trajectory) {
  const auto& ss = trajectory.samples;
  if (ss.size() < 16) fail(ErrorCode::SpanTooShort, "too few samples to classify");
  EmpiricalClassification out;

  // Unbounded height: large growth that is monotone over the second half.
  const double zRatio = ss.back().z / ss.front().z;
  bool monotoneTail = true;
  for (std::size_t i = ss.size() / 2; i + 1 < ss.size(); ++i)
    if (ss[i + 1].z < ss[i].z) {
      monotoneTail = false;
      break;
    }
  out.zBounded = !(zRatio > 1e3 && monotoneTail);

  // Debounced sign track of u; a sign must hold for two samples to count.
  constexpr double kDeadZone = 1e-9;
  std::vector<std::pair<double, int>> transitions;  // (time, new sign)
  {
    int current = 0, pendingSign = 0, pendingCount = 0;
    for (const auto& s : ss) {
      const int sign = s.u > kDeadZone ? 1 : (s.u < -kDeadZone ? -1 : 0);
      if (sign == 0 || sign == current) {
        pendingSign = 0;
        pendingCount = 0;
        continue;
      }
      if (sign == pendingSign) {
        if (++pendingCount >= 2) {
          if (current != 0) transitions.emplace_back(s.t, sign);
          current = sign;
          pendingSign = 0;
          pendingCount = 0;
        }
      } else {
        pendingSign = sign;
        pendingCount = 1;
      }
    }
  }
  out.monotoneX = transitions.empty();

  // Height maxima mark the periods; refine each through the parabola of the
  // neighbouring samples to beat the grid quantization.
  std::vector<std::size_t> maxima;
  std::vector<double> maximaT;
  for (std::size_t i = 1; i + 1 < ss.size(); ++i)
    if (ss[i].z > ss[i - 1].z && ss[i].z >= ss[i + 1].z) {
      maxima.push_back(i);
      const double denom = ss[i - 1].z - 2.0 * ss[i].z + ss[i + 1].z;
      double tPeak = ss[i].t;
      if (denom < 0.0)
        tPeak += 0.5 * (ss[i + 1].t - ss[i - 1].t) / 2.0 * (ss[i - 1].z - ss[i + 1].z) / denom;
      maximaT.push_back(tPeak);
    }

  const double xSpan = ss.back().x - ss.front().x;
  if (maxima.size() >= 2) {
    const double T = (maximaT.back() - maximaT.front()) / double(maximaT.size() - 1);
    bool consistent = T > 0.0;
    for (std::size_t i = 0; i + 1 < maximaT.size(); ++i)
      if (std::abs(maximaT[i + 1] - maximaT[i] - T) > 0.05 * T) consistent = false;
    if (consistent) {
      out.periodFound = true;
      out.period = T;
      const double tFirst = ss[maxima.front()].t;
      const double tLast = ss[maxima.back()].t;
      const double nPeriods = (tLast - tFirst) / T;
      out.drift = (ss[maxima.back()].x - ss[maxima.front()].x) / nPeriods;
      out.driftSign = *out.drift > kDeadZone ? 1 : (*out.drift < -kDeadZone ? -1 : 0);
      int changes = 0;
      for (const auto& [t, sign] : transitions)
        if (t >= tFirst && t < tLast) ++changes;
      out.xSignChanges = static_cast<int>(std::lround(changes / nPeriods));
      double crestU = 0.0;
      for (std::size_t i : maxima) crestU += ss[i].u;
      out.crestSign = crestU > 0.0 ? 1 : (crestU < 0.0 ? -1 : 0);

      // Self-intersection sweep over the polyline. Loops close around the
      // height maxima, so scan two periods to keep one loop fully interior.
      const double tEnd = tFirst + std::min(2.0, nPeriods) * T;
      std::size_t lo = maxima.front();
      std::size_t hi = lo;
      while (hi + 1 < ss.size() && ss[hi].t < tEnd) ++hi;
      const std::size_t stride = std::max<std::size_t>(1, (hi - lo) / 800);
      std::vector<std::size_t> pts;
      for (std::size_t i = lo; i <= hi; i += stride) pts.push_back(i);
      for (std::size_t i = 0; i + 1 < pts.size() && !out.loopDetected; ++i)
        for (std::size_t j = i + 2; j + 1 < pts.size(); ++j) {
          const auto &a = ss[pts[i]], &b = ss[pts[i + 1]], &c = ss[pts[j]],
                     &d = ss[pts[j + 1]];
          if (segments_cross(a.x, a.z, b.x, b.z, c.x, c.z, d.x, d.z)) {
            out.loopDetected = true;
            break;
          }
        }
    }
  }

  if (!out.zBounded) {
    out.klass = TrajectoryClass::NonPhysicalUnboundedZ;
  } else if (out.periodFound) {
    if (out.xSignChanges == 0) {
      out.klass = out.driftSign >= 0 ? TrajectoryClass::UndulatingRight
                                     : TrajectoryClass::UndulatingLeft;
      out.monotoneX = true;
    } else if (out.xSignChanges <= 3) {
      out.klass = out.crestSign > 0 ? TrajectoryClass::LoopForwardDrift
                                    : TrajectoryClass::LoopBackwardDrift;
    } else {
      out.klass = TrajectoryClass::Peculiar;
    }
  } else if (out.monotoneX) {
    out.klass = xSpan > 0.0 ? TrajectoryClass::UndulatingRight
                            : TrajectoryClass::UndulatingLeft;
    out.driftSign = xSpan > 0.0 ? 1 : -1;
  } else {
    out.klass = TrajectoryClass::NumericalFallback;
  }
  return out;
}

}  // namespace wavetraj
