#include "groverad/model.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace groverad {

namespace {

constexpr double kBoundaryTol = 1e-12;
constexpr int kPositivityGrid = 1001;

void check_boundary(const std::string& what, double got, double want) {
  if (!std::isfinite(got) || std::abs(got - want) > kBoundaryTol) {
    throw std::invalid_argument("schedule: " + what + " must equal " + std::to_string(want));
  }
}

}  // namespace

Schedule::Schedule(std::string name, Function turn_off, Function turn_on)
    : Schedule(std::move(name), std::move(turn_off), std::move(turn_on), false) {}

Schedule::Schedule(std::string name, Function turn_off, Function turn_on, bool linear)
    : name_(std::move(name)),
      turn_off_(std::move(turn_off)),
      turn_on_(std::move(turn_on)),
      linear_(linear) {
  if (!turn_off_ || !turn_on_) {
    throw std::invalid_argument("schedule: functions must be callable");
  }
  check_boundary("f(0)", f(0.0), 1.0);
  check_boundary("f(1)", f(1.0), 0.0);
  check_boundary("g(0)", g(0.0), 0.0);
  check_boundary("g(1)", g(1.0), 1.0);
  for (int i = 0; i < kPositivityGrid; ++i) {
    const double s = static_cast<double>(i) / (kPositivityGrid - 1);
    if (f(s) < 0.0 || g(s) < 0.0) {
      throw std::invalid_argument("schedule: f and g must be non-negative on [0, 1]");
    }
  }
}

Schedule Schedule::linear() {
  static const Schedule instance(
      "linear", [](double s) { return 1.0 - s; }, [](double s) { return s; }, true);
  return instance;
}

ProblemSize::ProblemSize(long long n) : n_(n) {
  if (n < 2) {
    throw std::invalid_argument("problem size N must satisfy N >= 2, got " + std::to_string(n));
  }
}

double FieldVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double QuantumState::norm() const { return std::sqrt(std::norm(alpha) + std::norm(beta)); }

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

FieldComponents field_components(double s, const ProblemSize& n, const Schedule& sched) {
  const double f = sched.f(s);
  const double g = sched.g(s);
  const double nn = n.as_double();
  return {2.0 * f * std::sqrt(nn - 1.0), 2.0 * f + nn * (g - f)};
}

FieldVector grover_field(double s, const ProblemSize& n, const Schedule& sched) {
  const auto [X, Z] = field_components(s, n, sched);
  const double nn = n.as_double();
  return {X / nn, 0.0, Z / nn};
}

double gap(double s, const ProblemSize& n, const Schedule& sched) {
  const auto [X, Z] = field_components(s, n, sched);
  return std::hypot(X, Z) / n.as_double();
}

double mixing_angle(double s, const ProblemSize& n, const Schedule& sched) {
  const auto [X, Z] = field_components(s, n, sched);
  return std::atan2(X, Z);
}

Eigensystem eigensystem(const FieldVector& h) {
  const double magnitude = h.norm();
  const double polar = std::atan2(std::hypot(h.x, h.y), h.z);
  const double c = std::cos(0.5 * polar);
  const double sn = std::sin(0.5 * polar);
  Complex phase{1.0, 0.0};
  if (h.y != 0.0) {
    phase = std::polar(1.0, std::atan2(h.y, h.x));
  }
  Eigensystem out;
  out.e_minus = -0.5 * magnitude;
  out.e_plus = 0.5 * magnitude;
  out.v_minus = {Complex{c, 0.0}, phase * sn};
  out.v_plus = {-std::conj(phase) * sn, Complex{c, 0.0}};
  return out;
}

Eigensystem eigensystem(double s, const ProblemSize& n, const Schedule& sched) {
  const double theta = mixing_angle(s, n, sched);
  const double omega = gap(s, n, sched);
  const double c = std::cos(0.5 * theta);
  const double sn = std::sin(0.5 * theta);
  return {-0.5 * omega, 0.5 * omega, {c, sn}, {-sn, c}};
}

QuantumState initial_state(const ProblemSize& n) {
  const double nn = n.as_double();
  return {Complex{1.0 / std::sqrt(nn), 0.0}, Complex{std::sqrt((nn - 1.0) / nn), 0.0}};
}

BlochVector bloch_vector(const QuantumState& psi) {
  const Complex cross = std::conj(psi.alpha) * psi.beta;
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(psi.alpha) - std::norm(psi.beta)};
}

QuantumState apply_hamiltonian(const FieldVector& h, const QuantumState& psi) {
  // -(1/2) [[hz, hx - i hy], [hx + i hy, -hz]]
  const Complex off_up{h.x, -h.y};
  const Complex off_down{h.x, h.y};
  return {-0.5 * (h.z * psi.alpha + off_up * psi.beta),
          -0.5 * (off_down * psi.alpha - h.z * psi.beta)};
}

Complex inner(const QuantumState& a, const QuantumState& b) {
  return std::conj(a.alpha) * b.alpha + std::conj(a.beta) * b.beta;
}

}  // namespace groverad
