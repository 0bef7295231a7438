#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "wavetraj/elliptic.hpp"
#include "wavetraj/irrotational.hpp"
#include "wavetraj/vorticity.hpp"

using namespace wavetraj;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kPiSq = kPi * kPi;
constexpr double kFourPiSq = 4.0 * kPiSq;

double literal_residual(double y, double yPrime, double C, double c0) {
  const double w = y * y + 1.0;
  return yPrime * yPrime - C * w * w + kFourPiSq * c0 * w - kFourPiSq;
}

ShearState shear_at(const TrajectorySample& s) {
  const double X = moving_frame(s).X;
  const double V = kTwoPi * (s.u - 1.0);
  const double y = 1.0 / std::tan(0.5 * X);
  return {y, -0.5 * V * (y * y + 1.0)};
}

// Cubic Hermite interpolation of a sampled quantity with known slope.
double hermite(double t, const TrajectorySample& s0, const TrajectorySample& s1,
               double y0, double d0, double y1, double d1) {
  const double h = s1.t - s0.t;
  const double w = (t - s0.t) / h;
  const double h00 = (1 + 2 * w) * (1 - w) * (1 - w);
  const double h10 = w * (1 - w) * (1 - w);
  const double h01 = w * w * (3 - 2 * w);
  const double h11 = w * w * (w - 1);
  return h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
}

struct Interpolated {
  double x;
  double z;
};

Interpolated at_time(const Trajectory& traj, double t) {
  std::size_t lo = 0, hi = traj.samples.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (traj.samples[mid].t <= t ? lo : hi) = mid;
  }
  const auto& a = traj.samples[lo];
  const auto& b = traj.samples[hi];
  return {hermite(t, a, b, a.x, a.u, b.x, b.u), hermite(t, a, b, a.z, a.v, b.z, b.v)};
}

}  // namespace

TEST_CASE("initial shear state") {
  SUBCASE("half-integer abscissa zeroes the cotangent") {
    const ShearState s = initial_shear_state(FlowConfig::with_shear(0.3, 4.0), {0.5, 0.8});
    CHECK(s.y == 0.0);
  }
  SUBCASE("strong positive shear") {
    const ShearState s = initial_shear_state(FlowConfig::with_shear(0.0, 10.0), {0.5, 0.5});
    CHECK(s.yPrime == doctest::Approx(-3.0 * kPi).epsilon(1e-14));
  }
  SUBCASE("adverse shear with favorable current") {
    const ShearState s = initial_shear_state(FlowConfig::with_shear(2.0, -1.0), {0.5, 0.5});
    CHECK(s.yPrime == doctest::Approx(0.5 * kPi).epsilon(1e-14));
  }
  CHECK_THROWS_AS(initial_shear_state(FlowConfig::with_shear(0.0, 1.0), {1.0, 0.5}), Error);
}

TEST_CASE("first integral from initial data") {
  SUBCASE("C = 5 pi^2 exemplar") {
    const FirstIntegral fi = first_integral(FlowConfig::with_shear(0.0, 10.0), {0.5, 0.5});
    CHECK(fi.C == doctest::Approx(5.0 * kPiSq).epsilon(1e-14));
    CHECK(fi.ASquared == fi.C);
    CHECK(fi.branchSign == -1);
    CHECK(fi.conditionMet);
  }
  SUBCASE("C = 4.25 pi^2 exemplar") {
    const FirstIntegral fi = first_integral(FlowConfig::with_shear(2.0, -1.0), {0.5, 0.5});
    CHECK(fi.C == doctest::Approx(4.25 * kPiSq).epsilon(1e-14));
    CHECK(fi.branchSign == 1);
    CHECK(fi.conditionMet);  // 4.25 pi^2 > 4 pi^2
  }
  SUBCASE("negative constant leaves the analytic regime") {
    // y'(0) = 1.5 pi needs shear z0 = 0.5 at c0 = 0
    const FirstIntegral fi = first_integral(FlowConfig::with_shear(0.0, 1.0), {0.5, 0.5});
    CHECK(fi.C == doctest::Approx(-1.75 * kPiSq).epsilon(1e-13));
    CHECK_FALSE(fi.conditionMet);
  }
  SUBCASE("defining relation holds at t = 0") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ush(-3.0, 12.0), uc(-2.5, 2.5), ux(0.1, 0.9),
        uz(0.05, 1.0);
    for (int i = 0; i < 200; ++i) {
      const FlowConfig cfg = FlowConfig::with_shear(uc(rng), ush(rng));
      const ParticleState init{ux(rng), uz(rng)};
      const ShearState s = initial_shear_state(cfg, init);
      const FirstIntegral fi = first_integral(cfg, init);
      CHECK(std::abs(literal_residual(s.y, s.yPrime, fi.C, cfg.c0)) <
            1e-12 * std::max(1.0, std::abs(fi.C) * std::pow(s.y * s.y + 1.0, 2)));
    }
  }
}

TEST_CASE("phase acceleration zeroes") {
  CHECK(phase_ode_rhs(0.0, 0.7) == 0.0);
  CHECK(std::abs(phase_ode_rhs(kPi, 0.0)) < 1e-12);
  // 1 - c0 - cos X vanishes at X = pi/2 when c0 = 1
  CHECK(std::abs(phase_ode_rhs(kPi / 2, 1.0)) < 1e-9);
}

TEST_CASE("integrated orbit reduces to the closed forms at zero shear") {
  for (double c0 : {0.0, -2.0, -0.5, 3.0, 1.0}) {
    const FlowConfig cfg = FlowConfig::with_shear(c0, 0.0);
    const ParticleState init{0.5, 0.5};
    const Trajectory orbit = integrate_orbit(cfg, init, 2.0, 1e-4);
    IrrotationalPath path = [&] {
      if (c0 == 0.0) return IrrotationalPath::zero_current(init);
      if (c0 > 0.0 && c0 < 2.0) return IrrotationalPath::inside_band(cfg, init);
      return IrrotationalPath::outside_band(cfg, init);
    }();
    double worst = 0.0;
    for (std::size_t i = 0; i < orbit.samples.size(); i += 200) {
      const auto& s = orbit.samples[i];
      worst = std::max(worst, std::abs(s.x - path.x(s.t)));
      worst = std::max(worst, std::abs(s.z - path.z(s.t)));
    }
    CAPTURE(c0);
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("first-integral conservation along integrated orbits") {
  const FlowConfig cfg = FlowConfig::with_shear(0.0, 10.0);
  const ParticleState init{0.5, 0.5};
  const FirstIntegral fi = first_integral(cfg, init);
  const Trajectory orbit = integrate_orbit(cfg, init, 5.0, 1e-4);
  double worstEnergy = 0.0, worstLiteral = 0.0;
  for (const auto& s : orbit.samples) {
    const double X = moving_frame(s).X;
    const double V = kTwoPi * (s.u - 1.0);
    worstEnergy = std::max(worstEnergy, std::abs(phase_energy(X, V, cfg.c0) - fi.C));
    const ShearState y = shear_at(s);
    if (std::abs(y.y) <= 10.0)
      worstLiteral =
          std::max(worstLiteral, std::abs(literal_residual(y.y, y.yPrime, fi.C, cfg.c0)));
  }
  CHECK(worstEnergy < 1e-6);
  CHECK(worstLiteral < 1e-6);
}

TEST_CASE("substitution consistency at t = 0") {
  const FlowConfig cfg = FlowConfig::with_shear(0.7, -2.0);
  const ParticleState init{0.3, 0.6};
  const ShearState s = initial_shear_state(cfg, init);
  const double X0 = kTwoPi * init.x0;
  const double V0 = kTwoPi * (std::cos(X0) + cfg.shear * init.z0 + cfg.c0 - 1.0);
  CHECK(s.y == doctest::Approx(1.0 / std::tan(0.5 * X0)).epsilon(1e-12));
  CHECK(V0 == doctest::Approx(-2.0 * s.yPrime / (s.y * s.y + 1.0)).epsilon(1e-12));
}

TEST_CASE("height periodicity in the rotational regime") {
  const FlowConfig cfg = FlowConfig::with_shear(0.0, 10.0);
  const ParticleState init{0.5, 0.5};
  const FirstIntegral fi = first_integral(cfg, init);
  const double T = orbit_period(fi, cfg);
  const Trajectory orbit = integrate_orbit(cfg, init, 2.0, 1e-4);
  double worst = 0.0;
  for (double t = 0.0; t + T < 2.0; t += 0.173)
    worst = std::max(worst, std::abs(at_time(orbit, t + T).z - at_time(orbit, t).z));
  CHECK(worst < 1e-6);
  // x - t shares the period
  worst = 0.0;
  for (double t = 0.0; t + T < 2.0; t += 0.173) {
    const double a = at_time(orbit, t).x - t;
    const double b = at_time(orbit, t + T).x - (t + T);
    worst = std::max(worst, std::abs(b - a + fi.branchSign));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("period computations") {
  SUBCASE("routes agree on the exemplar and at random constants") {
    CHECK(orbit_period_quadrature(5.0 * kPiSq, 0.0) ==
          doctest::Approx(orbit_period_elliptic(5.0 * kPiSq, 0.0)).epsilon(1e-9));
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uc(-2.5, 2.5), umargin(0.2, 30.0);
    for (int i = 0; i < 50; ++i) {
      const double c0 = uc(rng);
      const double C = kPiSq * c0 * c0 + umargin(rng);
      const double a = orbit_period_quadrature(C, c0);
      const double b = orbit_period_elliptic(C, c0);
      CHECK(std::abs(a - b) < 1e-8 * b);
    }
  }
  SUBCASE("huge constant limit") { CHECK(orbit_period_quadrature(1e8, 0.0) < 1e-3); }
  SUBCASE("condition violated") {
    const FirstIntegral fi = first_integral(FlowConfig::with_shear(0.0, 1.0), {0.5, 0.5});
    CHECK_THROWS_AS(orbit_period(fi, FlowConfig::with_shear(0.0, 1.0)), Error);
  }
  SUBCASE("orbit returns by one phase revolution after one period") {
    const FlowConfig cfg = FlowConfig::with_shear(0.0, 10.0);
    const FirstIntegral fi = first_integral(cfg, {0.5, 0.5});
    const double T = orbit_period(fi, cfg);
    const Trajectory orbit = integrate_orbit(cfg, {0.5, 0.5}, 2.0 * T + 0.1, 1e-4);
    for (double t : {0.01, 0.2, T / 2}) {
      const double Xa = kTwoPi * (at_time(orbit, t).x - t);
      const double Xb = kTwoPi * (at_time(orbit, t + T).x - (t + T));
      CHECK(std::abs(Xb - Xa + fi.branchSign * kTwoPi) < 1e-6);
    }
  }
}

TEST_CASE("drift identities") {
  SUBCASE("rightward branch drifts forward by T + 1") {
    const FlowConfig cfg = FlowConfig::with_shear(0.0, 10.0);
    const FirstIntegral fi = first_integral(cfg, {0.5, 0.5});
    const double T = orbit_period(fi, cfg);
    const Trajectory orbit = integrate_orbit(cfg, {0.5, 0.5}, T + 0.05, 1e-4);
    const double drift = drift_per_period(orbit, T);
    CHECK(fi.branchSign == -1);
    CHECK(drift == doctest::Approx(T + 1.0).epsilon(1e-9));
    CHECK(drift > 0.0);
  }
  SUBCASE("leftward branch drifts by T - 1 < 0") {
    const FlowConfig cfg = FlowConfig::with_shear(0.0, -1.0);
    const FirstIntegral fi = first_integral(cfg, {0.5, 0.5});
    const double T = orbit_period(fi, cfg);
    const Trajectory orbit = integrate_orbit(cfg, {0.5, 0.5}, T + 0.05, 1e-4);
    const double drift = drift_per_period(orbit, T);
    CHECK(fi.branchSign == 1);
    CHECK(drift == doctest::Approx(T - 1.0).epsilon(1e-9));
    CHECK(drift < 0.0);
  }
  SUBCASE("short span is rejected") {
    const FlowConfig cfg = FlowConfig::with_shear(0.0, 10.0);
    const Trajectory orbit = integrate_orbit(cfg, {0.5, 0.5}, 0.1, 1e-4);
    CHECK_THROWS_AS(drift_per_period(orbit, 0.4), Error);
  }
  SUBCASE("closed orbits sit on the T = 1 boundary") {
    // Bisect the zero-current constant for a unit sweep period, then realize
    // it through the shear at x0 = 0.5, z0 = 0.5: the drift T - 1 vanishes
    // and the orbit closes.
    double lo = 0.2 * kPiSq, hi = 0.84 * kPiSq;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      (orbit_period_elliptic(mid, 0.0) > 1.0 ? lo : hi) = mid;
    }
    const double cStar = 0.5 * (lo + hi);
    const double shear = (2.0 - std::sqrt(cStar + 4.0 * kPiSq) / kPi) / 0.5;
    const FlowConfig cfg = FlowConfig::with_shear(0.0, shear);
    const FirstIntegral fi = first_integral(cfg, {0.5, 0.5});
    CHECK(fi.branchSign == 1);
    const double T = orbit_period(fi, cfg);
    CHECK(std::abs(T - 1.0) < 1e-12);
    const Trajectory orbit = integrate_orbit(cfg, {0.5, 0.5}, T + 0.05, 1e-4);
    const double drift = drift_per_period(orbit, T);
    CHECK(std::abs(drift) < 1e-9);  // closed-orbit candidate
  }
}

TEST_CASE("step control") {
  // Coarse steps must either refine to the residual target or report failure.
  const FlowConfig cfg = FlowConfig::with_shear(0.0, 10.0);
  CHECK_NOTHROW(integrate_orbit(cfg, {0.5, 0.5}, 1.0, 1e-3));
  CHECK_THROWS_AS(integrate_orbit(cfg, {0.5, 0.5}, 1.0, 0.2), Error);
  try {
    integrate_orbit(cfg, {0.5, 0.5}, 1.0, 0.2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StepTooLarge);
  }
}

TEST_CASE("integer abscissa is fine in phase space") {
  // The phase integrator needs no cotangent; only the shear-state map does.
  const FlowConfig cfg = FlowConfig::with_shear(0.0, 10.0);
  const Trajectory orbit = integrate_orbit(cfg, {1.0, 0.5}, 0.5, 1e-4);
  CHECK(orbit.samples.front().x == 1.0);
  CHECK_THROWS_AS(initial_shear_state(cfg, {1.0, 0.5}), Error);
}
