#include "groverad/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "groverad/errors.hpp"

namespace groverad {

namespace {

constexpr int kMaxIterations = 50;
constexpr double kResidualTol = 1e-12;
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

}  // namespace

double lambert_w_minus1(double x) {
  const double branch_point = -std::exp(-1.0);
  if (std::isnan(x) || x >= 0.0) {
    throw DomainError("lambert_w_minus1", "argument must lie in [-1/e, 0), got " +
                                              std::to_string(x));
  }
  // 1 + e x measures the distance to the branch point; a few ulps either side
  // of -1/e is the branch point itself.
  const double distance = 1.0 + std::exp(1.0) * x;
  if (distance < -4.0 * kEpsilon) {
    throw DomainError("lambert_w_minus1", "argument below -1/e");
  }
  if (x <= branch_point || distance <= 4.0 * kEpsilon) {
    return -1.0;
  }

  const double log_arg = std::log(-x);
  double w = log_arg - std::log(-log_arg);
  if (!(w < -1.0)) {
    w = -1.0 - std::sqrt(2.0 * distance);
  }
  for (int it = 0; it < kMaxIterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0 || !std::isfinite(denom)) break;
    double next = w - f / denom;
    if (next >= -1.0) {
      next = 0.5 * (w - 1.0);
    }
    const double delta = next - w;
    w = next;
    if (std::abs(delta) <= 4.0 * kEpsilon * std::abs(w)) break;
  }
  const double residual = std::abs(w * std::exp(w) - x);
  if (!(residual <= kResidualTol * std::abs(x))) {
    throw NonConvergenceError("lambert_w_minus1",
                              "Halley iteration did not converge for x = " + std::to_string(x));
  }
  return w;
}

double critical_time(double rate, double prefactor) {
  if (!(rate > 0.0) || !(prefactor > 0.0)) {
    throw DomainError("critical_time", "A and B must be positive");
  }
  const double argument = -0.5 * rate * std::sqrt(prefactor);
  if (argument < -std::exp(-1.0) && 1.0 + std::exp(1.0) * argument < -4.0 * kEpsilon) {
    throw DomainError("critical_time",
                      "-A sqrt(B)/2 < -1/e: exp(-A T) and B/T^2 do not cross");
  }
  return -2.0 / rate * lambert_w_minus1(argument);
}

}  // namespace groverad
