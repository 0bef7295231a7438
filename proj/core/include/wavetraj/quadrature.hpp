#ifndef WAVETRAJ_QUADRATURE_HPP
#define WAVETRAJ_QUADRATURE_HPP

#include <functional>
#include <span>

#include "wavetraj/types.hpp"

namespace wavetraj {

struct QuadratureOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  int max_intervals = 4000;
};

/// Globally adaptive Gauss-Kronrod 15(7) quadrature of f over [a, b].
/// Throws QuadratureFailure if the error target is not met within the
/// interval budget. a > b is allowed and flips the sign.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

/// Same, but with mandatory interior split points (e.g. known seams of the
/// integrand's parametrization). `points` must be sorted ascending; values
/// outside (a, b) are ignored.
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::span<const double> points, const QuadratureOptions& opts = {});

}  // namespace wavetraj

#endif
