#pragma once

#include <functional>

namespace probint {

/// A deterministic scalar integrand over a bounded interval [lower, upper].
struct Integrand {
  std::function<double(double)> eval;
  double lower = 0.0;
  double upper = 1.0;
};

/// One quadrature evaluation: a step-size h > 0 paired with I(f, h).
struct StepSample {
  double h = 0.0;
  double value = 0.0;
};

}  // namespace probint
