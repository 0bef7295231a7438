#ifndef WAVETRAJ_WAVE_FIELD_HPP
#define WAVETRAJ_WAVE_FIELD_HPP

#include "wavetraj/types.hpp"

namespace wavetraj {

/// The travelling wave profile f(s) = cos(2*pi*s). Every downstream formula
/// assumes this shape; it is kept behind these two functions so a general
/// profile would be a localized change.
double wave_shape(double s) noexcept;
double wave_shape_slope(double s) noexcept;

/// Surface elevation eta(x, t) = f(x - t).
double surface_profile(double x, double t) noexcept;

/// Time derivative of the surface elevation, eta_t = 2*pi*sin(2*pi*(x-t)).
double surface_profile_rate(double x, double t) noexcept;

/// Linearized field at a point:
///   u = f(x-t) + shear*z + c0,  v = -z*f'(x-t),  eta = p = f(x-t).
/// Valid on the fluid column 0 <= z <= 1; accepted for z up to 2 since
/// computed paths may leave the column. The formulas are evaluated as-is
/// beyond that as well (the linear model has no singularity in z).
FieldSample velocity_field(double x, double z, double t, const FlowConfig& config) noexcept;

}  // namespace wavetraj

#endif
