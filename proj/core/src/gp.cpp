#include "probint/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "probint/errors.hpp"

namespace probint {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

void check_params(const KernelParams& params) {
  if (!(params.length_scale > 0.0)) {
    throw InvalidParams("matern_kernel: length_scale must be positive");
  }
  if (params.nu != 1.5) {
    throw InvalidParams("matern_kernel: only nu = 1.5 is supported");
  }
  if (!(params.signal_variance > 0.0)) {
    throw InvalidParams("matern_kernel: signal_variance must be positive");
  }
  if (params.noise_jitter < 0.0) {
    throw InvalidParams("matern_kernel: noise_jitter must be >= 0");
  }
}

/// Unit-variance Matern 3/2 correlation at lag r.
double matern_unit(double r, double length_scale) {
  const double z = kSqrt3 * std::abs(r) / length_scale;
  return (1.0 + z) * std::exp(-z);
}

Eigen::MatrixXd correlation_matrix(std::span<const StepSample> samples,
                                   double length_scale) {
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd c(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    c(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      c(i, j) = c(j, i) =
          matern_unit(samples[i].h - samples[j].h, length_scale);
    }
  }
  return c;
}

double resolve_prior_mean(std::span<const StepSample> samples, PriorMean strategy) {
  switch (strategy) {
    case PriorMean::Zero:
      return 0.0;
    case PriorMean::AverageOfObservations: {
      double sum = 0.0;
      for (const auto& s : samples) sum += s.value;
      return sum / static_cast<double>(samples.size());
    }
    case PriorMean::LastObservation: {
      const auto it = std::min_element(
          samples.begin(), samples.end(),
          [](const StepSample& a, const StepSample& b) { return a.h < b.h; });
      return it->value;
    }
  }
  throw InvalidParams("fit_gp: unknown prior mean strategy");
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return out;
}

}  // namespace

double matern_kernel(double r, const KernelParams& params) {
  check_params(params);
  return params.signal_variance * matern_unit(r, params.length_scale);
}

double log_marginal_likelihood(std::span<const StepSample> samples,
                               const KernelParams& params,
                               double prior_mean_value) {
  check_params(params);
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd k = params.signal_variance * correlation_matrix(samples, params.length_scale);
  k.diagonal().array() += params.noise_jitter;
  Eigen::LLT<Eigen::MatrixXd> llt(k);
  if (llt.info() != Eigen::Success) {
    throw FactorizationFailure("log_marginal_likelihood: kernel matrix not positive definite");
  }
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) y(i) = samples[i].value - prior_mean_value;
  const Eigen::VectorXd z = llt.matrixL().solve(y);
  const double log_det_half = llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  return -0.5 * z.squaredNorm() - log_det_half -
         0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
}

GpModel fit_gp(std::span<const StepSample> samples, PriorMean prior_mean,
               const GpFitConfig& config) {
  const std::size_t n = samples.size();
  if (n < 2) {
    throw DegenerateData("fit_gp: need at least two samples");
  }
  double h_min = samples[0].h, h_max = samples[0].h;
  for (const auto& s : samples) {
    h_min = std::min(h_min, s.h);
    h_max = std::max(h_max, s.h);
  }
  const double range_h = h_max - h_min;
  if (!(range_h > 0.0)) {
    throw DegenerateData("fit_gp: all sample inputs coincide");
  }

  const double m = resolve_prior_mean(samples, prior_mean);
  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  double value_mean = 0.0;
  for (const auto& s : samples) value_mean += s.value;
  value_mean /= static_cast<double>(n);
  double var_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    y(static_cast<Eigen::Index>(i)) = samples[i].value - m;
    const double d = samples[i].value - value_mean;
    var_y += d * d;
  }
  var_y /= static_cast<double>(n);
  const double var_scale = std::max(var_y, 1e-12);

  const auto lengths = log_spaced(config.length_scale_span_lo * range_h,
                                  config.length_scale_span_hi * range_h,
                                  config.length_scale_points);
  const auto variances = log_spaced(config.variance_span_lo * var_scale,
                                    config.variance_span_hi * var_scale,
                                    config.variance_points);

  struct Candidate {
    double lml;
    double length_scale;
    double signal_variance;
    double jitter_rel;
  };
  std::optional<Candidate> best;

  // Descending length-scale order makes the strict ">" comparison keep the
  // smoothest model among lattice ties.
  for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) {
    const double l = *it;
    Eigen::MatrixXd corr = correlation_matrix(samples, l);
    double jitter = config.jitter_rel;
    Eigen::LLT<Eigen::MatrixXd> llt;
    bool ok = false;
    while (jitter <= config.jitter_rel_max * (1.0 + 1e-12)) {
      Eigen::MatrixXd k = corr;
      k.diagonal().array() += jitter;
      llt.compute(k);
      if (llt.info() == Eigen::Success) {
        ok = true;
        break;
      }
      jitter *= 10.0;
    }
    if (!ok) continue;
    const Eigen::VectorXd z = llt.matrixL().solve(y);
    const double quad = z.squaredNorm();
    const double log_det_corr =
        2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    for (double s2 : variances) {
      // lml of K = s2 * (C + jitter I), reusing the unit-variance factor.
      const double lml = -0.5 * quad / s2 -
                         0.5 * (static_cast<double>(n) * std::log(s2) + log_det_corr) -
                         0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
      if (!best || lml > best->lml) {
        best = Candidate{lml, l, s2, jitter};
      }
    }
  }
  if (!best) {
    throw FactorizationFailure("fit_gp: no lattice point produced a positive-definite kernel");
  }

  GpModel model;
  model.training.assign(samples.begin(), samples.end());
  model.params = KernelParams{best->length_scale, 1.5, best->signal_variance,
                              best->jitter_rel * best->signal_variance};
  model.prior_mean = prior_mean;
  model.prior_mean_value = m;

  Eigen::MatrixXd k = best->signal_variance * correlation_matrix(samples, best->length_scale);
  double jitter_abs = model.params.noise_jitter;
  Eigen::LLT<Eigen::MatrixXd> llt;
  while (true) {
    Eigen::MatrixXd kj = k;
    kj.diagonal().array() += jitter_abs;
    llt.compute(kj);
    if (llt.info() == Eigen::Success) break;
    jitter_abs *= 10.0;
    if (jitter_abs > config.jitter_rel_max * best->signal_variance * (1.0 + 1e-12)) {
      throw FactorizationFailure("fit_gp: final factorization failed after jitter escalation");
    }
  }
  model.params.noise_jitter = jitter_abs;
  model.chol = llt.matrixL();
  model.alpha = llt.solve(y);
  return model;
}

PosteriorPoint posterior_at(const GpModel& model, double h_query) {
  const auto n = static_cast<Eigen::Index>(model.training.size());
  Eigen::VectorXd k_star(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k_star(i) = model.params.signal_variance *
                matern_unit(h_query - model.training[static_cast<std::size_t>(i)].h,
                            model.params.length_scale);
  }
  const double mean = model.prior_mean_value + k_star.dot(model.alpha);
  const Eigen::VectorXd v =
      model.chol.triangularView<Eigen::Lower>().solve(k_star);
  const double variance = model.params.signal_variance - v.squaredNorm();
  return PosteriorPoint{mean, std::sqrt(std::max(variance, 0.0))};
}

}  // namespace probint
