#pragma once

#include "probint/integrand.hpp"

namespace probint {

/// Composite trapezoidal rule with step-size h.
///
/// h must evenly partition [lower, upper]: the panel count round((upper-lower)/h)
/// has to match the exact ratio within 1e-9 relative. Throws InvalidStep when
/// h <= 0 or h > upper-lower, StepNotDivisor when the partition check fails.
[[nodiscard]] double trapezoid_composite(const Integrand& f, double h);

/// Gaussian bump at 0.35 (width 0.1) minus sin(10x)/3; the built-in quadrature
/// demo integrand, used on [0, 1].
[[nodiscard]] double test_function(double x);

/// test_function packaged with its [0, 1] domain.
[[nodiscard]] Integrand test_integrand();

/// 1 / (1 + 25 x^2), the classic equispaced-interpolation counterexample.
[[nodiscard]] double runge_function(double x);

/// runge_function packaged with its [-1, 1] domain.
[[nodiscard]] Integrand runge_integrand();

}  // namespace probint
