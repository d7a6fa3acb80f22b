#pragma once

#include <span>
#include <utility>
#include <vector>

#include "probint/integrand.hpp"

namespace probint {

/// Settings for the Richardson step-contraction recurrence.
struct RichardsonConfig {
  double gamma = 0.5;  ///< step contraction h_{j+1} = gamma * h_j, in (0, 1)
  int order = 2;       ///< leading error order n of the base scheme
  double tau = 1e-8;   ///< stop when successive extrapolants differ by <= tau
  int max_iter = 20;
};

struct ExtrapolationResult {
  double estimate = 0.0;
  double error_estimate = 0.0;  ///< |last - previous| extrapolant
  int iterations = 0;
  bool converged = false;
};

/// Richardson extrapolation of the composite trapezoidal rule toward h = 0.
///
/// Builds the deferred-approach tableau over h_j = gamma^j * h0, where column k
/// combines entries with the weight gamma^(1-n-k), and walks its diagonal R_j
/// until |R_j - R_{j-1}| <= tau. Non-convergence within max_iter is reported
/// through the flag, not an exception; divisibility failures of gamma^j * h0
/// propagate from the quadrature.
[[nodiscard]] ExtrapolationResult richardson_sequence(const Integrand& f,
                                                      const RichardsonConfig& config,
                                                      double h0);

/// Value at `target` of the polynomial interpolating the samples, plus the
/// last Neville correction |P_n - P_{n-1}| as an error proxy. A single sample
/// yields an infinite correction (never "converged" on its own).
[[nodiscard]] std::pair<double, double> neville_extrapolate(
    std::span<const StepSample> samples, double target);

/// Interpolating-polynomial values at each query point.
[[nodiscard]] std::vector<double> neville_interpolate_curve(
    std::span<const StepSample> samples, std::span<const double> query_points);

/// Classic Romberg integration: trapezoid at h = (b-a) * 2^-k, tableau columns
/// weighted 4^m, stopping when successive diagonal entries differ by <= tau.
[[nodiscard]] ExtrapolationResult romberg(const Integrand& f, double tau,
                                          int max_levels = 20);

}  // namespace probint
