#include "groverad/driving.hpp"

#include <cmath>
#include <stdexcept>

namespace groverad {

std::string_view to_string(DrivingKind kind) {
  switch (kind) {
    case DrivingKind::none:
      return "none";
    case DrivingKind::exact:
      return "exact";
    case DrivingKind::const_min:
      return "const_min";
    case DrivingKind::const_max:
      return "const_max";
  }
  return "none";
}

std::optional<DrivingKind> parse_driving_kind(std::string_view token) {
  for (auto kind : {DrivingKind::none, DrivingKind::exact, DrivingKind::const_min,
                    DrivingKind::const_max}) {
    if (token == to_string(kind)) return kind;
  }
  return std::nullopt;
}

DrivingSpec::DrivingSpec(DrivingKind kind, const ProblemSize& n, double running_time)
    : kind_(kind), n_(n), running_time_(running_time) {
  if (!(running_time > 0.0) || !std::isfinite(running_time)) {
    throw std::invalid_argument("driving: running time T must be positive and finite");
  }
  const double root = std::sqrt(n.as_double() - 1.0);
  switch (kind) {
    case DrivingKind::const_min:
      amplitude_ = 2.0 * root / (n.as_double() * running_time);
      break;
    case DrivingKind::const_max:
      amplitude_ = 2.0 * root / running_time;
      break;
    default:
      break;
  }
}

double theta_dot_ds(double s, const ProblemSize& n) {
  const double nn = n.as_double();
  const double u = 1.0 - 2.0 * s;
  const double bracket = u * u + 4.0 / nn * (1.0 - s) * s;
  return 2.0 * std::sqrt(nn - 1.0) / nn / bracket;
}

double theta_dot_ds_derivative(double s, const ProblemSize& n) {
  const double nn = n.as_double();
  const double u = 1.0 - 2.0 * s;
  const double bracket = u * u + 4.0 / nn * (1.0 - s) * s;
  const double bracket_ds = -4.0 * u + 4.0 / nn * (1.0 - 2.0 * s);
  return -2.0 * std::sqrt(nn - 1.0) / nn * bracket_ds / (bracket * bracket);
}

FieldVector driving_field(const DrivingSpec& spec, double s) {
  switch (spec.kind()) {
    case DrivingKind::none:
      return {};
    case DrivingKind::exact:
      return {0.0, theta_dot_ds(s, spec.size()) / spec.running_time(), 0.0};
    case DrivingKind::const_min:
    case DrivingKind::const_max:
      return {0.0, spec.constant_amplitude(), 0.0};
  }
  return {};
}

FieldVector driving_field_derivative(const DrivingSpec& spec, double s) {
  if (spec.kind() == DrivingKind::exact) {
    return {0.0, theta_dot_ds_derivative(s, spec.size()) / spec.running_time(), 0.0};
  }
  return {};
}

DrivenLevels driven_spectrum(double s, const DrivingSpec& spec) {
  const FieldVector total =
      grover_field(s, spec.size(), Schedule::linear()) + driving_field(spec, s);
  const double half = 0.5 * total.norm();
  return {-half, half};
}

}  // namespace groverad
