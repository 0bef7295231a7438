#ifndef WAVETRAJ_CLASSIFIER_HPP
#define WAVETRAJ_CLASSIFIER_HPP

#include "wavetraj/oracle.hpp"
#include "wavetraj/types.hpp"

namespace wavetraj {

/// Everything the analytic shape decision needs: the first integral, the
/// branch sign, and the quadratic
///   (pi^2 - C) W^2 + 4 pi^2 c0 W - 4 pi^2 = 0   (W = y^2 + 1)
/// whose roots locate the zeros of dx/dt along the orbit.
struct ClassifierAnalysis {
  double c0 = 0.0;
  double C = 0.0;
  int branchSign = 0;
  bool conditionMet = false;
  double Delta = 0.0;  ///< 16 pi^2 (pi^2 c0^2 + pi^2 - C)
  std::optional<double> W1;
  std::optional<double> W2;
  std::string subCase;
  bool intervalsVisited = false;  ///< y sweeps every interval; equals conditionMet
  bool boundary = false;          ///< a decision threshold was hit within tolerance
};

struct Classification {
  TrajectoryClass klass = TrajectoryClass::NumericalFallback;
  ClassifierAnalysis analysis;
  /// Filled when the analytic tree abstains (condition violated or a
  /// boundary hit) and the empirical fallback ran.
  std::optional<EmpiricalClassification> empirical;
};

/// The analytic shape decision for a rotational flow (shear != 0; the
/// irrotational taxonomy lives in classify_irrotational). A negative branch
/// (y' < 0) forces dx/dt > 0 outright; on the positive branch the class
/// follows from where the roots W1, W2 sit relative to 1. Threshold
/// equalities are flagged `boundary` and, like the condition-violated
/// regime, resolved by the sampled-orbit classifier when `resolveFallback`
/// is set.
Classification classify(const FlowConfig& config, const ParticleState& init,
                        bool resolveFallback = true);

/// One row per y-interval of the analytic sign analysis.
struct SignInterval {
  double yLow;   ///< -inf allowed
  double yHigh;  ///< +inf allowed
  int xPrimeSign;
  int zPrimeSign;
};

/// The interval decomposition of sign(dx/dt) and sign(dz/dt) over y for an
/// analysis with conditionMet. ConditionViolated otherwise.
std::vector<SignInterval> sign_table(const ClassifierAnalysis& analysis);

}  // namespace wavetraj

#endif
