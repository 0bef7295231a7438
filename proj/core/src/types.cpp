#include "wavetraj/types.hpp"

#include <cmath>

namespace wavetraj {

const char* to_string(TrajectoryClass c) noexcept {
  switch (c) {
    case TrajectoryClass::UndulatingRight: return "UndulatingRight";
    case TrajectoryClass::UndulatingLeft: return "UndulatingLeft";
    case TrajectoryClass::LoopForwardDrift: return "LoopForwardDrift";
    case TrajectoryClass::LoopBackwardDrift: return "LoopBackwardDrift";
    case TrajectoryClass::Peculiar: return "Peculiar";
    case TrajectoryClass::NonPhysicalUnboundedZ: return "NonPhysicalUnboundedZ";
    case TrajectoryClass::NumericalFallback: return "NumericalFallback";
  }
  return "?";
}

std::optional<TrajectoryClass> trajectory_class_from_string(const std::string& s) noexcept {
  for (auto c : {TrajectoryClass::UndulatingRight, TrajectoryClass::UndulatingLeft,
                 TrajectoryClass::LoopForwardDrift, TrajectoryClass::LoopBackwardDrift,
                 TrajectoryClass::Peculiar, TrajectoryClass::NonPhysicalUnboundedZ,
                 TrajectoryClass::NumericalFallback}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

const char* to_string(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegeneratePhase: return "DegeneratePhase";
    case ErrorCode::DegenerateConstant: return "DegenerateConstant";
    case ErrorCode::DegenerateBranch: return "DegenerateBranch";
    case ErrorCode::BranchBoundary: return "BranchBoundary";
    case ErrorCode::ModulusOutOfRange: return "ModulusOutOfRange";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::SpanTooShort: return "SpanTooShort";
    case ErrorCode::PeriodNotFound: return "PeriodNotFound";
    case ErrorCode::EmptyTrajectory: return "EmptyTrajectory";
  }
  return "?";
}

FlowConfig FlowConfig::irrotational(double c0) {
  FlowConfig cfg;
  cfg.c0 = c0;
  cfg.omega0 = 0.0;
  cfg.shear = 0.0;
  return cfg;
}

FlowConfig FlowConfig::with_shear(double c0, double shear, double g, double h0) {
  if (!(g > 0.0) || !(h0 > 0.0)) fail(ErrorCode::InvalidArgument, "g and h0 must be positive");
  FlowConfig cfg;
  cfg.c0 = c0;
  cfg.g = g;
  cfg.h0 = h0;
  cfg.shear = shear;
  cfg.omega0 = shear == 0.0 ? 0.0 : shear * g / std::sqrt(g * h0);
  return cfg;
}

FlowConfig FlowConfig::physical(double c0, double omega0, double g, double h0) {
  if (!(g > 0.0) || !(h0 > 0.0)) fail(ErrorCode::InvalidArgument, "g and h0 must be positive");
  FlowConfig cfg;
  cfg.c0 = c0;
  cfg.omega0 = omega0;
  cfg.g = g;
  cfg.h0 = h0;
  cfg.shear = omega0 == 0.0 ? 0.0 : omega0 * std::sqrt(g * h0) / g;
  return cfg;
}

void require_valid(const ParticleState& p) {
  if (!std::isfinite(p.x0) || !std::isfinite(p.z0))
    fail(ErrorCode::InvalidArgument, "initial data must be finite");
  if (!(p.z0 > 0.0)) fail(ErrorCode::InvalidArgument, "initial height z0 must be positive");
  if (p.z0 > 1.0) fail(ErrorCode::InvalidArgument, "initial height z0 must not exceed 1");
}

}  // namespace wavetraj
