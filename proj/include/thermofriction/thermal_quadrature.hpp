#pragma once

#include <functional>
#include <span>

namespace thermofriction {

/// Controls for integrals of g(omega)/sinh^2(beta omega/2) over omega >= 0.
/// x_max bounds the dimensionless variable x = beta omega.
struct QuadratureSpec {
  double rel_tol = 1e-9;
  double x_max = 45.0;
  int max_subdivisions = 2000;

  void validate() const;
};

/// Smallest admissible x_max; the kernel tail beyond it is below e^-30.
inline constexpr double kMinimumCutoff = 30.0;

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b].
/// Bisects the panel with the largest error estimate until the summed
/// estimate is <= rel_tol |value|. Interior breakpoints seed the initial
/// partition. Throws ConvergenceError once max_panels is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, int max_panels,
                                    std::span<const double> breakpoints = {});

/// 1/sinh^2(y) for y > 0 without overflow for large y.
double inverse_sinh_squared(double y);

/// Integral of g(omega)/sinh^2(beta omega/2) over (0, x_max/beta]. Extra
/// breakpoints are frequencies (a.u.) where g is sharply peaked.
QuadratureResult thermal_integral_detailed(const std::function<double(double)>& g, double beta,
                                           const QuadratureSpec& spec,
                                           std::span<const double> breakpoints = {});

double thermal_integral(const std::function<double(double)>& g, double beta,
                        const QuadratureSpec& spec = {});

}  // namespace thermofriction
