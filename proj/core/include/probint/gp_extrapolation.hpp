#pragma once

#include <optional>
#include <span>
#include <vector>

#include "probint/gp.hpp"
#include "probint/integrand.hpp"

namespace probint {

/// Settings for the adaptive GP extrapolation loop.
struct AdaptiveConfig {
  double tau = 1e-3;       ///< accept once the posterior sd at h = 0 is <= tau
  double gamma_hat = 0.5;  ///< target uncertainty fraction for the next step
  /// Initial step-sizes, strictly decreasing. Empty selects the default
  /// {1, 1/2, 1/3, 1/4} scaled by the integrand's domain length.
  std::vector<double> initial_steps;
  int max_new_points = 50;
  int grid_points = 1000;
  GpFitConfig fit;
};

/// One GP fit in the adaptive loop. Iteration 0 is the fit on the initial
/// dataset; later iterations record the step-size added just before them.
struct AdaptiveIteration {
  int iteration = 0;
  std::size_t dataset_size = 0;
  std::optional<double> new_h;
  std::optional<double> new_value;
  double estimate = 0.0;
  double sigma0 = 0.0;
};

/// Outcome of gp_richardson: the posterior mean and sd at h = 0, with the
/// full iteration history and the final dataset.
struct ProbEstimate {
  double estimate = 0.0;
  double sigma0 = 0.0;
  bool converged = false;
  std::vector<AdaptiveIteration> history;
  std::vector<StepSample> dataset;
};

/// Evaluates the trapezoid rule at each step-size, in the given order.
[[nodiscard]] std::vector<StepSample> initial_dataset(const Integrand& f,
                                                      std::span<const double> steps);

/// Grid search for the step whose posterior sd best matches
/// gamma_hat * sd(0). The grid spans (0, h_min_current) exclusive, starting at
/// h_min_current / grid_points; ties break toward smaller h. Throws
/// DegenerateUncertainty when sd(0) is exactly zero.
[[nodiscard]] double select_next_h(const GpModel& model, double gamma_hat,
                                   double h_min_current, int grid_points);

/// Adaptive loop: fit a GP to the dataset, accept the h = 0 posterior once its
/// sd is within tau, otherwise evaluate the trapezoid rule at the selected next
/// step (snapped to the nearest exact divisor of the domain) and refit.
/// Non-convergence after max_new_points additions is reported via the flag.
[[nodiscard]] ProbEstimate gp_richardson(const Integrand& f,
                                         const AdaptiveConfig& config,
                                         PriorMean prior_mean);

}  // namespace probint
