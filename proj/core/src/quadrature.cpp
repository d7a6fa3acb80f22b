#include "probint/quadrature.hpp"

#include <cmath>
#include <string>

#include "probint/errors.hpp"

namespace probint {

double trapezoid_composite(const Integrand& f, double h) {
  const double span = f.upper - f.lower;
  if (!(h > 0.0) || h > span) {
    throw InvalidStep("trapezoid_composite: h must satisfy 0 < h <= " +
                      std::to_string(span) + ", got " + std::to_string(h));
  }
  const double ratio = span / h;
  const auto panels = static_cast<long long>(std::llround(ratio));
  if (panels < 1 || std::abs(ratio - static_cast<double>(panels)) >
                        1e-9 * std::max(1.0, ratio)) {
    throw StepNotDivisor("trapezoid_composite: h = " + std::to_string(h) +
                         " does not evenly partition the domain");
  }
  double sum = 0.5 * (f.eval(f.lower) + f.eval(f.upper));
  for (long long i = 1; i < panels; ++i) {
    // Nodes placed as a fraction of the span so the last interior node cannot
    // drift past the endpoint.
    sum += f.eval(f.lower + span * (static_cast<double>(i) / static_cast<double>(panels)));
  }
  return h * sum;
}

double test_function(double x) {
  const double d = x - 0.35;
  return std::exp(-d * d / (2.0 * 0.1 * 0.1)) - std::sin(10.0 * x) / 3.0;
}

Integrand test_integrand() {
  return Integrand{[](double x) { return test_function(x); }, 0.0, 1.0};
}

double runge_function(double x) { return 1.0 / (1.0 + 25.0 * x * x); }

Integrand runge_integrand() {
  return Integrand{[](double x) { return runge_function(x); }, -1.0, 1.0};
}

}  // namespace probint
