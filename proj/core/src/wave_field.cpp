#include "wavetraj/wave_field.hpp"

#include <cmath>
#include <numbers>

namespace wavetraj {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sin/cos of the wave phase, evaluated together so that every caller goes
// through one libm path (a lone sin() and a fused sincos() can differ in the
// last ulp, which would break the exact kinematic identity). noinline keeps
// the optimizer from specializing callers that drop one of the outputs.
struct PhaseTrig {
  double sin;
  double cos;
};

[[gnu::noinline]] PhaseTrig phase_trig(double s) noexcept {
  const double theta = kTwoPi * s;
  return {std::sin(theta), std::cos(theta)};
}

}  // namespace

double wave_shape(double s) noexcept { return phase_trig(s).cos; }

double wave_shape_slope(double s) noexcept { return -kTwoPi * phase_trig(s).sin; }

double surface_profile(double x, double t) noexcept { return wave_shape(x - t); }

double surface_profile_rate(double x, double t) noexcept {
  return kTwoPi * phase_trig(x - t).sin;
}

FieldSample velocity_field(double x, double z, double t, const FlowConfig& config) noexcept {
  const PhaseTrig p = phase_trig(x - t);
  FieldSample f;
  f.eta = p.cos;
  f.p = p.cos;
  f.u = p.cos + config.shear * z + config.c0;
  f.v = kTwoPi * z * p.sin;  // = -z f'(x - t)
  return f;
}

}  // namespace wavetraj
