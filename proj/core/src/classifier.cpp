#include "wavetraj/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wavetraj/vorticity.hpp"

namespace wavetraj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiSq = kPi * kPi;
constexpr double kBoundaryTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool near(double a, double b, double scale) { return std::abs(a - b) <= kBoundaryTol * scale; }

EmpiricalClassification run_fallback(const FlowConfig& config, const ParticleState& init,
                                     const FirstIntegral& fi) {
  double tMax = 10.0;
  if (fi.conditionMet) tMax = std::max(2.0, 3.6 * orbit_period(fi, config));
  const int nSamples = static_cast<int>(std::min(60000.0, std::max(4000.0, tMax * 1500.0)));
  const Trajectory traj = integrate_raw(config, init, tMax, 1e-10, nSamples);
  return classify_empirical(traj);
}

}  // namespace

Classification classify(const FlowConfig& config, const ParticleState& init,
                        bool resolveFallback) {
  if (!config.rotational())
    fail(ErrorCode::InvalidArgument,
         "classify handles rotational flows; use classify_irrotational for shear = 0");
  const FirstIntegral fi = first_integral(config, init);
  if (fi.degenerateBranch)
    fail(ErrorCode::DegenerateBranch, "y'(0) = 0 with y''(0) = 0; branch sign unresolved");

  Classification result;
  ClassifierAnalysis& a = result.analysis;
  a.c0 = config.c0;
  a.C = fi.C;
  a.branchSign = fi.branchSign;
  a.conditionMet = fi.conditionMet;
  a.intervalsVisited = fi.conditionMet;
  a.Delta = 16.0 * kPiSq * (kPiSq * a.c0 * a.c0 + kPiSq - a.C);

  const double c0 = config.c0;
  const double C = fi.C;
  const double scale = std::max(kPiSq, std::abs(C));

  if (!fi.conditionMet) {
    a.subCase = "condition violated";
    result.klass = TrajectoryClass::NumericalFallback;
    if (resolveFallback) result.empirical = run_fallback(config, init, fi);
    return result;
  }

  // Roots of the W-quadratic, in the notation W1 = (+ root branch).
  const double lead = kPiSq - C;
  if (a.Delta > 0.0 && std::abs(lead) > kBoundaryTol * scale) {
    const double root = 2.0 * kPi * std::sqrt(kPiSq * c0 * c0 + kPiSq - C);
    a.W1 = (-2.0 * kPiSq * c0 + root) / lead;
    a.W2 = (-2.0 * kPiSq * c0 - root) / lead;
  }

  if (fi.branchSign < 0) {
    // dx/dt = [pi W + sqrt(...)] / (pi W) > 0 everywhere.
    a.subCase = "plus alternative";
    result.klass = TrajectoryClass::UndulatingRight;
    return result;
  }

  // Minus alternative (y' > 0) from here on.
  const bool zeroCurrent = std::abs(c0) <= kBoundaryTol;
  if (zeroCurrent && c0 != 0.0) a.boundary = true;  // c0 ~ 0 inside the c0 != 0 tree

  if (zeroCurrent) {
    // |A| against pi decides between monotone-left and looping.
    if (near(C, kPiSq, scale)) a.boundary = true;
    if (C > kPiSq) {
      a.subCase = "c0 = 0, |A| > pi";
      result.klass = TrajectoryClass::UndulatingLeft;
    } else {
      a.subCase = "c0 = 0, |A| < pi";
      result.klass = TrajectoryClass::LoopForwardDrift;
    }
  } else if (C > kPiSq * c0 * c0 + kPiSq) {
    a.subCase = "I";
    result.klass = TrajectoryClass::UndulatingLeft;
    if (near(C, kPiSq * c0 * c0 + kPiSq, scale)) a.boundary = true;
  } else {
    if (near(C, kPiSq * c0 * c0 + kPiSq, scale) || near(C, kPiSq, scale)) a.boundary = true;
    if (lead > 0.0) {
      // II a: one positive root W1.
      const double w1 = a.W1.value_or(0.0);
      if (near(w1, 1.0, 1.0)) a.boundary = true;
      if (w1 < 1.0) {
        a.subCase = "II a, W1 - 1 < 0";
        result.klass = TrajectoryClass::UndulatingRight;
      } else {
        a.subCase = "II a, W1 - 1 > 0";
        result.klass = TrajectoryClass::LoopForwardDrift;
      }
    } else {
      // II b: both roots share the sign of c0.
      if (c0 < 0.0) {
        a.subCase = "II b, c0 < 0";
        result.klass = TrajectoryClass::UndulatingLeft;
      } else {
        const double w1 = a.W1.value_or(0.0);
        const double w2 = a.W2.value_or(0.0);
        if (near(w1, 1.0, 1.0) || near(w2, 1.0, 1.0)) a.boundary = true;
        if (w1 < 1.0 && w2 < 1.0) {
          a.subCase = "II b, W1 - 1 < 0, W2 - 1 < 0";
          result.klass = TrajectoryClass::UndulatingLeft;
        } else if (w1 < 1.0 && w2 > 1.0) {
          a.subCase = "II b, W1 - 1 < 0 < W2 - 1";
          result.klass = TrajectoryClass::LoopBackwardDrift;
        } else {
          a.subCase = "II b, W1 - 1 > 0, W2 - 1 > 0";
          result.klass = TrajectoryClass::Peculiar;
        }
      }
    }
  }

  if (a.boundary && resolveFallback) {
    result.empirical = run_fallback(config, init, fi);
    result.klass = result.empirical->klass;
  }
  return result;
}

std::vector<SignInterval> sign_table(const ClassifierAnalysis& a) {
  if (!a.conditionMet)
    fail(ErrorCode::ConditionViolated, "sign table requires the positivity condition");

  // dz/dt carries the sign of y; intervals are always split at 0.
  if (a.branchSign < 0)
    return {{-kInf, 0.0, +1, -1}, {0.0, kInf, +1, +1}};

  const double lead = kPiSq - a.C;
  std::vector<double> zeros;  // positive ordinates where dx/dt vanishes
  if (a.W1 && *a.W1 > 1.0) zeros.push_back(std::sqrt(*a.W1 - 1.0));
  if (a.W2 && *a.W2 > 1.0) zeros.push_back(std::sqrt(*a.W2 - 1.0));
  std::sort(zeros.begin(), zeros.end());

  // Sign of dx/dt at y = +/- infinity equals the sign of (pi^2 - C); each
  // root ordinate flips it moving inward.
  const int outer = lead > 0.0 ? +1 : -1;
  std::vector<SignInterval> table;
  if (zeros.empty()) {
    table.push_back({-kInf, 0.0, outer, -1});
    table.push_back({0.0, kInf, outer, +1});
    return table;
  }
  if (zeros.size() == 1) {
    const double r = zeros[0];
    table.push_back({-kInf, -r, outer, -1});
    table.push_back({-r, 0.0, -outer, -1});
    table.push_back({0.0, r, -outer, +1});
    table.push_back({r, kInf, outer, +1});
    return table;
  }
  const double r1 = zeros[0], r2 = zeros[1];
  table.push_back({-kInf, -r2, outer, -1});
  table.push_back({-r2, -r1, -outer, -1});
  table.push_back({-r1, 0.0, outer, -1});
  table.push_back({0.0, r1, outer, +1});
  table.push_back({r1, r2, -outer, +1});
  table.push_back({r2, kInf, outer, +1});
  return table;
}

}  // namespace wavetraj
