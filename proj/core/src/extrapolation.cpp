#include "probint/extrapolation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "probint/errors.hpp"
#include "probint/quadrature.hpp"

namespace probint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_distinct(std::span<const StepSample> samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const double a = samples[i].h, b = samples[j].h;
      if (std::abs(a - b) <= 1e-14 * std::max(std::abs(a), std::abs(b))) {
        throw DuplicateAbscissa("neville: abscissae " + std::to_string(a) +
                                " and " + std::to_string(b) + " coincide");
      }
    }
  }
}

/// Incremental Neville evaluation at a fixed target. diag_[k] holds the
/// interpolant over the last k+1 samples; the full-span value appears at
/// diag_.back() after each add().
class NevilleSequence {
 public:
  explicit NevilleSequence(double target) : target_(target) {}

  void add(double x, double y) {
    std::vector<double> next(xs_.size() + 1);
    next[0] = y;
    for (std::size_t k = 1; k < next.size(); ++k) {
      const double xk = xs_[xs_.size() - k];
      next[k] = ((target_ - xk) * next[k - 1] - (target_ - x) * diag_[k - 1]) /
                (x - xk);
    }
    xs_.push_back(x);
    diag_ = std::move(next);
    prev_value_ = value_;
    value_ = diag_.back();
    delta_ = xs_.size() >= 2 ? std::abs(value_ - prev_value_) : kInf;
  }

  [[nodiscard]] double value() const { return value_; }
  [[nodiscard]] double delta() const { return delta_; }

 private:
  double target_;
  std::vector<double> xs_;
  std::vector<double> diag_;
  double value_ = 0.0;
  double prev_value_ = 0.0;
  double delta_ = kInf;
};

}  // namespace

ExtrapolationResult richardson_sequence(const Integrand& f,
                                        const RichardsonConfig& config,
                                        double h0) {
  if (!(config.gamma > 0.0 && config.gamma < 1.0)) {
    throw std::invalid_argument("richardson_sequence: gamma must lie in (0, 1)");
  }
  if (config.order < 1) {
    throw std::invalid_argument("richardson_sequence: order must be >= 1");
  }
  if (!(config.tau > 0.0)) {
    throw std::invalid_argument("richardson_sequence: tau must be positive");
  }
  if (config.max_iter < 1) {
    throw std::invalid_argument("richardson_sequence: max_iter must be >= 1");
  }

  std::vector<double> row{trapezoid_composite(f, h0)};
  double h = h0;
  double previous = row[0];
  ExtrapolationResult result{row[0], kInf, 0, false};
  for (int j = 1; j <= config.max_iter; ++j) {
    h *= config.gamma;
    std::vector<double> next(static_cast<std::size_t>(j) + 1);
    next[0] = trapezoid_composite(f, h);
    for (int k = 1; k <= j; ++k) {
      const double w = std::pow(config.gamma, static_cast<double>(1 - config.order - k));
      next[k] = (w * next[k - 1] - row[k - 1]) / (w - 1.0);
    }
    row = std::move(next);
    result.estimate = row.back();
    result.error_estimate = std::abs(result.estimate - previous);
    result.iterations = j;
    if (result.error_estimate <= config.tau) {
      result.converged = true;
      return result;
    }
    previous = result.estimate;
  }
  return result;
}

std::pair<double, double> neville_extrapolate(std::span<const StepSample> samples,
                                              double target) {
  if (samples.empty()) {
    throw std::invalid_argument("neville_extrapolate: need at least one sample");
  }
  check_distinct(samples);
  NevilleSequence seq(target);
  for (const auto& s : samples) seq.add(s.h, s.value);
  return {seq.value(), seq.delta()};
}

std::vector<double> neville_interpolate_curve(std::span<const StepSample> samples,
                                              std::span<const double> query_points) {
  if (samples.empty()) {
    throw std::invalid_argument("neville_interpolate_curve: need at least one sample");
  }
  check_distinct(samples);
  std::vector<double> out;
  out.reserve(query_points.size());
  for (double q : query_points) {
    NevilleSequence seq(q);
    for (const auto& s : samples) seq.add(s.h, s.value);
    out.push_back(seq.value());
  }
  return out;
}

ExtrapolationResult romberg(const Integrand& f, double tau, int max_levels) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("romberg: tau must be positive");
  }
  if (max_levels < 0) {
    throw std::invalid_argument("romberg: max_levels must be >= 0");
  }
  const double span = f.upper - f.lower;
  double trap_sum = 0.5 * span * (f.eval(f.lower) + f.eval(f.upper));
  std::vector<double> row{trap_sum};
  ExtrapolationResult result{trap_sum, kInf, 0, false};
  for (int k = 1; k <= max_levels; ++k) {
    const long long panels = 1LL << k;
    const double hk = span / static_cast<double>(panels);
    double odd = 0.0;
    for (long long i = 1; i < panels; i += 2) {
      odd += f.eval(f.lower + span * (static_cast<double>(i) / static_cast<double>(panels)));
    }
    trap_sum = 0.5 * trap_sum + hk * odd;
    std::vector<double> next(static_cast<std::size_t>(k) + 1);
    next[0] = trap_sum;
    double pow4 = 1.0;
    for (int m = 1; m <= k; ++m) {
      pow4 *= 4.0;
      next[m] = (pow4 * next[m - 1] - row[m - 1]) / (pow4 - 1.0);
    }
    const double prev_diag = row.back();
    row = std::move(next);
    result.estimate = row.back();
    result.error_estimate = std::abs(result.estimate - prev_diag);
    result.iterations = k;
    if (result.error_estimate <= tau) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

}  // namespace probint
