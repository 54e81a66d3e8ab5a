#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "groverad/model.hpp"

namespace groverad {

enum class DrivingKind { none, exact, const_min, const_max };

std::string_view to_string(DrivingKind kind);
std::optional<DrivingKind> parse_driving_kind(std::string_view token);

/// Counterdiabatic term added to the Grover Hamiltonian for a run of length T.
///
/// All kinds act along sigma_y. The constant kinds freeze their amplitude at
/// construction: const_min uses the endpoint value of the exact term,
/// const_max its peak at the avoided crossing.
class DrivingSpec {
 public:
  DrivingSpec(DrivingKind kind, const ProblemSize& n, double running_time);

  static DrivingSpec none(const ProblemSize& n, double running_time) {
    return {DrivingKind::none, n, running_time};
  }

  DrivingKind kind() const { return kind_; }
  const ProblemSize& size() const { return n_; }
  double running_time() const { return running_time_; }
  /// hy of the constant kinds; zero for none and exact.
  double constant_amplitude() const { return amplitude_; }

 private:
  DrivingKind kind_;
  ProblemSize n_;
  double running_time_;
  double amplitude_ = 0.0;
};

/// |d theta / ds| for the linear schedule:
/// 2 sqrt(N-1)/N / ((1-2s)^2 + (4/N)(1-s)s).
double theta_dot_ds(double s, const ProblemSize& n);

/// s-derivative of theta_dot_ds.
double theta_dot_ds_derivative(double s, const ProblemSize& n);

/// Driving field in the H = -(1/2) h.sigma convention. The mixing angle
/// decreases along the linear schedule, so the transitionless term
/// H_D = (d theta/dt / 2) sigma_y has hy = +theta_dot_ds / T.
FieldVector driving_field(const DrivingSpec& spec, double s);

/// s-derivative of driving_field.
FieldVector driving_field_derivative(const DrivingSpec& spec, double s);

struct DrivenLevels {
  double e0;
  double e1;
};

/// Instantaneous eigenvalues of H(s) + H_D(s), linear schedule.
DrivenLevels driven_spectrum(double s, const DrivingSpec& spec);

}  // namespace groverad
