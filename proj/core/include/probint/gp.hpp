#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "probint/integrand.hpp"

namespace probint {

/// Matern covariance parameters. Only the nu = 1.5 closed form is supported;
/// noise_jitter is an absolute value added to the kernel-matrix diagonal.
struct KernelParams {
  double length_scale = 1.0;
  double nu = 1.5;
  double signal_variance = 1.0;
  double noise_jitter = 0.0;
};

/// How the GP prior mean is resolved from the training data.
enum class PriorMean {
  Zero,
  AverageOfObservations,
  LastObservation,  ///< the value observed at the smallest step-size
};

/// Hyperparameter search lattice. Length-scales cover
/// [span_lo, span_hi] * range(inputs) and signal variances cover
/// [span_lo, span_hi] * max(var(values), 1e-12), both log-spaced.
struct GpFitConfig {
  int length_scale_points = 40;
  double length_scale_span_lo = 1e-3;
  double length_scale_span_hi = 10.0;
  int variance_points = 20;
  double variance_span_lo = 1e-6;
  double variance_span_hi = 1e3;
  /// Relative diagonal jitter (times signal_variance), escalated by factors
  /// of 10 up to jitter_rel_max when a factorization fails.
  double jitter_rel = 1e-10;
  double jitter_rel_max = 1e-4;
};

/// A fitted Gaussian process over step-size space.
///
/// chol is the lower-triangular factor of K + noise_jitter * I and alpha the
/// solved weight vector against the mean-subtracted observations, so posterior
/// queries never re-factorize. Immutable after fit_gp; concurrent reads are safe.
struct GpModel {
  std::vector<StepSample> training;
  KernelParams params;
  PriorMean prior_mean = PriorMean::LastObservation;
  double prior_mean_value = 0.0;
  Eigen::MatrixXd chol;
  Eigen::VectorXd alpha;
};

struct PosteriorPoint {
  double mean = 0.0;
  double sd = 0.0;
};

/// Matern covariance at lag r >= 0. For nu = 1.5 this is
/// signal_variance * (1 + sqrt(3) r / l) * exp(-sqrt(3) r / l).
/// Throws InvalidParams for l <= 0 or unsupported nu.
[[nodiscard]] double matern_kernel(double r, const KernelParams& params);

/// Log marginal likelihood of the samples under the given kernel and prior
/// mean value, computed through a Cholesky factorization of K + jitter * I.
/// Throws FactorizationFailure when that matrix is not positive definite.
[[nodiscard]] double log_marginal_likelihood(std::span<const StepSample> samples,
                                             const KernelParams& params,
                                             double prior_mean_value);

/// Fits kernel hyperparameters by maximizing the log marginal likelihood over
/// the fixed lattice in `config`, tie-breaking toward larger length-scales.
/// Requires at least two samples spanning a nonzero input range
/// (DegenerateData otherwise); exact duplicates are tolerated through jitter.
[[nodiscard]] GpModel fit_gp(std::span<const StepSample> samples,
                             PriorMean prior_mean,
                             const GpFitConfig& config = {});

/// Exact GP posterior at a query point: mean = m + k*' alpha and
/// sd = sqrt(max(k(0) - k*' K^-1 k*, 0)).
[[nodiscard]] PosteriorPoint posterior_at(const GpModel& model, double h_query);

}  // namespace probint
