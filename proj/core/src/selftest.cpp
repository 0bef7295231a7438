#include "wavetraj/selftest.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "wavetraj/classifier.hpp"
#include "wavetraj/elliptic.hpp"
#include "wavetraj/io.hpp"
#include "wavetraj/irrotational.hpp"
#include "wavetraj/oracle.hpp"
#include "wavetraj/quadrature.hpp"
#include "wavetraj/vorticity.hpp"
#include "wavetraj/wave_field.hpp"

namespace wavetraj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

struct Runner {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool ok, double worst = 0.0) {
    std::ostringstream detail;
    if (worst != 0.0) detail << "worst residual " << worst;
    results.push_back({name, ok, detail.str()});
  }
};

void field_checks(Runner& r) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-2.0, 2.0), uz(0.0, 1.0), ut(0.0, 4.0);
  const FlowConfig cfg = FlowConfig::with_shear(0.7, 1.3);
  double worstMass = 0.0, worstShear = 0.0, worstSurface = 0.0, worstBottom = 0.0,
         worstPressure = 0.0;
  const double h = 1e-5;
  for (int i = 0; i < 200; ++i) {
    const double x = ux(rng), z = uz(rng), t = ut(rng);
    const double dudx =
        (velocity_field(x + h, z, t, cfg).u - velocity_field(x - h, z, t, cfg).u) / (2 * h);
    const double dvdz =
        (velocity_field(x, z + h, t, cfg).v - velocity_field(x, z - h, t, cfg).v) / (2 * h);
    worstMass = std::max(worstMass, std::abs(dudx + dvdz));
    const double dudz =
        (velocity_field(x, z + h, t, cfg).u - velocity_field(x, z - h, t, cfg).u) / (2 * h);
    worstShear = std::max(worstShear, std::abs(dudz - cfg.shear));
    worstSurface = std::max(
        worstSurface, std::abs(velocity_field(x, 1.0, t, cfg).v - surface_profile_rate(x, t)));
    worstBottom = std::max(worstBottom, std::abs(velocity_field(x, 0.0, t, cfg).v));
    worstPressure = std::max(worstPressure, std::abs(velocity_field(x, z, t, cfg).p -
                                                     velocity_field(x, 0.3, t, cfg).p));
  }
  r.check("field: mass conservation u_x + v_z = 0", worstMass < 1e-6, worstMass);
  r.check("field: du/dz equals the shear coefficient", worstShear < 1e-9, worstShear);
  r.check("field: kinematic surface condition", worstSurface == 0.0, worstSurface);
  r.check("field: bottom condition v(z=0) = 0", worstBottom == 0.0, worstBottom);
  r.check("field: pressure independent of z", worstPressure == 0.0, worstPressure);
}

void elliptic_checks(Runner& r) {
  r.check("elliptic: K(0) = pi/2", std::abs(elliptic_K(0.0) - kPi / 2) < 1e-15);
  double worst = 0.0;
  for (double phi : {0.3, 1.0})
    worst = std::max(worst, std::abs(elliptic_F(phi, 0.0) - phi));
  r.check("elliptic: F(phi, 0) = phi", worst < 1e-15, worst);
  worst = 0.0;
  for (double u : {0.5, 2.0}) {
    worst = std::max(worst, std::abs(jacobi_sn(u, 0.0) - std::sin(u)));
    worst = std::max(worst, std::abs(jacobi_sn(u, 1.0) - std::tanh(u)));
  }
  r.check("elliptic: sn degenerate moduli", worst < 1e-12, worst);
  worst = 0.0;
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> um(0.0, 0.95), uu(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double m = um(rng), u = uu(rng);
    const JacobiValues jv = jacobi_elliptic(u, m);
    worst = std::max(worst, std::abs(jv.sn * jv.sn + jv.cn * jv.cn - 1.0));
    worst = std::max(worst, std::abs(jv.dn * jv.dn + m * jv.sn * jv.sn - 1.0));
  }
  r.check("elliptic: sn/cn/dn identities", worst < 1e-12, worst);

  // Reduction against direct quadrature of the quartic integral.
  worst = 0.0;
  std::uniform_real_distribution<double> uc(-2.0, 2.0), uy(0.3, 4.0), uC(0.5, 25.0);
  for (int i = 0; i < 25; ++i) {
    const double c0 = uc(rng);
    const double C = kPi * kPi * c0 * c0 + uC(rng);
    const double Y = uy(rng);
    const EllipticReduction red = legendre_reduce_general(C, c0);
    const auto f = [C, c0](double y) {
      const double w = y * y + 1.0;
      return 1.0 / std::sqrt(C * w * w - 4 * kPi * kPi * c0 * w + 4 * kPi * kPi);
    };
    const double direct = integrate(f, 0.0, Y);
    const double reduced = red.prefactor * elliptic_F(reduction_angle(red, Y), red.kSquared);
    worst = std::max(worst, std::abs(direct - reduced) / std::abs(direct));
  }
  r.check("elliptic: Legendre reduction matches quadrature", worst < 1e-8, worst);
}

void irrotational_checks(Runner& r) {
  // Exact height law for the zero-current solution.
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ux(0.1, 0.9), uz(0.05, 1.0), ut(0.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const ParticleState init{ux(rng), uz(rng)};
    const auto path = IrrotationalPath::zero_current(init);
    const double A = path.params().a;
    for (int j = 0; j < 20; ++j) {
      const double t = ut(rng);
      const double u = kTwoPi * t + A;
      worst = std::max(worst,
                       std::abs(path.z(t) * (1.0 + A * A) / init.z0 - (1.0 + u * u)));
    }
  }
  r.check("irrotational: exact c0 = 0 height law", worst < 1e-12, worst);

  // Closed forms against the reference integrator.
  worst = 0.0;
  for (double c0 : {0.0, -2.0, -0.5, 3.0, 1.0}) {
    const FlowConfig cfg = FlowConfig::irrotational(c0);
    const ParticleState init{0.5, 0.5};
    Trajectory closed;
    if (c0 == 0.0)
      closed = trajectory_zero_current(init, 1.0, 201);
    else if (c0 * (c0 - 2.0) > 0.0)
      closed = trajectory_outside_band(cfg, init, 1.0, 201);
    else
      closed = trajectory_inside_band(cfg, init, 1.0, 201);
    const Trajectory ref = integrate_raw(cfg, init, 1.0, 1e-13, 201);
    for (std::size_t i = 0; i < closed.samples.size(); ++i) {
      worst = std::max(worst, std::abs(closed.samples[i].x - ref.samples[i].x));
      worst = std::max(worst, std::abs(closed.samples[i].z - ref.samples[i].z));
    }
  }
  r.check("irrotational: closed forms match the integrator", worst < 1e-6, worst);
}

void vorticity_checks(Runner& r) {
  const FlowConfig cfg = FlowConfig::with_shear(0.0, 10.0);
  const ParticleState init{0.5, 0.5};
  const FirstIntegral fi = first_integral(cfg, init);
  r.check("vorticity: exemplar first integral C = 5 pi^2",
          std::abs(fi.C - 5.0 * kPi * kPi) < 1e-9 && fi.branchSign == -1 && fi.conditionMet);

  const Trajectory orbit = integrate_orbit(cfg, init, 2.0, 1e-4);
  double worst = 0.0;
  for (const auto& s : orbit.samples) {
    const double X = kTwoPi * (s.x - s.t);
    const double V = kTwoPi * (s.u - 1.0);
    worst = std::max(worst, std::abs(phase_energy(X, V, cfg.c0) - fi.C));
  }
  r.check("vorticity: first-integral conservation", worst < 1e-6, worst);

  const double tQuad = orbit_period_quadrature(fi.C, cfg.c0);
  const double tEll = orbit_period_elliptic(fi.C, cfg.c0);
  r.check("vorticity: period routes agree",
          std::abs(tQuad - tEll) < 1e-8 * tEll, std::abs(tQuad - tEll) / tEll);

  const double T = orbit_period(fi, cfg);
  const double drift = drift_per_period(orbit, T);
  const double expectedDrift = T - fi.branchSign;
  r.check("vorticity: drift identity T - branch", std::abs(drift - expectedDrift) < 1e-6,
          std::abs(drift - expectedDrift));
}

void classifier_checks(Runner& r) {
  struct Pinned {
    double shear, c0;
    TrajectoryClass expected;
  };
  const Pinned pinned[] = {
      {10.0, 0.0, TrajectoryClass::UndulatingRight},
      {-1.0, 0.0, TrajectoryClass::UndulatingLeft},
      {-0.4, 0.0, TrajectoryClass::LoopForwardDrift},
      {-1.0, 2.0, TrajectoryClass::LoopBackwardDrift},
      {-0.54, 0.5, TrajectoryClass::Peculiar},
  };
  bool ok = true;
  for (const auto& p : pinned) {
    const auto result = classify(FlowConfig::with_shear(p.c0, p.shear), {0.5, 0.5}, false);
    ok = ok && result.klass == p.expected && !result.analysis.boundary;
  }
  r.check("classifier: pinned exemplars", ok);

  const auto result = classify(FlowConfig::with_shear(0.0, 10.0), {0.5, 0.5}, false);
  const Trajectory traj =
      integrate_raw(FlowConfig::with_shear(0.0, 10.0), {0.5, 0.5}, 1.5, 1e-10, 4000);
  const auto emp = classify_empirical(traj);
  r.check("classifier: analytic equals empirical (exemplar)", emp.klass == result.klass);

  bool irrotOk = classify_irrotational(3.0).klass == TrajectoryClass::UndulatingRight &&
                 classify_irrotational(-2.0).klass == TrajectoryClass::UndulatingLeft &&
                 classify_irrotational(-0.5).klass == TrajectoryClass::LoopForwardDrift &&
                 classify_irrotational(0.0).klass == TrajectoryClass::NonPhysicalUnboundedZ &&
                 classify_irrotational(1.0).klass == TrajectoryClass::NonPhysicalUnboundedZ &&
                 classify_irrotational(2.5).klass == TrajectoryClass::UndulatingRight;
  r.check("classifier: irrotational taxonomy", irrotOk);

  const FlowConfig shifted = FlowConfig::with_shear(0.5, -0.54);
  const Classification base = classify(shifted, {0.3, 0.4}, false);
  const Classification moved = classify(shifted, {1.3, 0.4}, false);
  r.check("classifier: periodic in the initial abscissa",
          base.klass == moved.klass &&
              std::abs(base.analysis.C - moved.analysis.C) < 1e-12 * std::abs(base.analysis.C));

  // Sign table against the sampled derivatives of the backward-loop exemplar.
  const FlowConfig loopCfg = FlowConfig::with_shear(2.0, -1.0);
  const Classification loopCls = classify(loopCfg, {0.5, 0.5}, false);
  const auto table = sign_table(loopCls.analysis);
  const Trajectory loopOrbit = integrate_orbit(loopCfg, {0.5, 0.5}, 1.2, 1e-4);
  bool signsOk = true;
  for (std::size_t i = 0; i < loopOrbit.samples.size(); i += 7) {
    const auto& s = loopOrbit.samples[i];
    if (std::abs(s.u) < 1e-8 || std::abs(s.v) < 1e-8) continue;
    const double X = kTwoPi * (s.x - s.t);
    const double sinHalf = std::sin(0.5 * X);
    if (std::abs(sinHalf) < 1e-6) continue;
    const double y = std::cos(0.5 * X) / sinHalf;
    for (const auto& row : table)
      if (y > row.yLow && y < row.yHigh) {
        if (std::min(y - row.yLow, row.yHigh - y) < 1e-6 * std::max(1.0, std::abs(y))) break;
        signsOk = signsOk && (s.u > 0 ? 1 : -1) == row.xPrimeSign &&
                  (s.v > 0 ? 1 : -1) == row.zPrimeSign;
        break;
      }
  }
  r.check("classifier: sign table matches sampled derivatives", signsOk);
}

void oracle_checks(Runner& r) {
  const double tol = 1e-10;
  const FlowConfig cfg = FlowConfig::with_shear(0.0, 10.0);
  const PointState fwd = flow_raw(cfg, {0.5, 0.5}, 0.0, 3.0, tol);
  const PointState back = flow_raw(cfg, fwd, 3.0, 0.0, tol);
  const double err = std::max(std::abs(back.x - 0.5), std::abs(back.z - 0.5));
  r.check("oracle: time reversal returns the initial data", err < 10 * tol, err);

  const Trajectory a = integrate_raw(cfg, {0.5, 0.5}, 2.0, 1e-8, 201);
  const Trajectory b = integrate_raw(cfg, {0.5, 0.5}, 2.0, 5e-9, 201);
  double diff = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    diff = std::max(diff, std::abs(a.samples[i].x - b.samples[i].x));
    diff = std::max(diff, std::abs(a.samples[i].z - b.samples[i].z));
  }
  r.check("oracle: tolerance self-consistency", diff < 10 * 5e-9, diff);
}

void io_checks(Runner& r) {
  const Trajectory traj = trajectory_zero_current({0.5, 0.5}, 1.0, 50);
  const std::string j = export_json(traj);
  const Trajectory back = import_json(j);
  bool same = back.samples.size() == traj.samples.size();
  if (same)
    for (std::size_t i = 0; i < traj.samples.size(); ++i)
      same = same && back.samples[i].t == traj.samples[i].t &&
             back.samples[i].x == traj.samples[i].x && back.samples[i].z == traj.samples[i].z &&
             back.samples[i].u == traj.samples[i].u && back.samples[i].v == traj.samples[i].v;
  r.check("io: JSON round-trip is exact", same);
  r.check("io: CSV deterministic", export_csv(traj) == export_csv(traj));
  const std::string svg = export_svg(traj);
  r.check("io: SVG contains one polyline",
          svg.find("<polyline") != std::string::npos &&
              svg.find("<polyline", svg.find("<polyline") + 1) == std::string::npos);
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  Runner r;
  field_checks(r);
  elliptic_checks(r);
  irrotational_checks(r);
  vorticity_checks(r);
  classifier_checks(r);
  oracle_checks(r);
  io_checks(r);
  return r.results;
}

}  // namespace wavetraj
