#include "groverad/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "groverad/errors.hpp"

namespace groverad {

namespace {

// Gauss-Legendre nodes on [0, 1]: 1/2 -+ sqrt(3)/6.
const double kGaussOffset = std::sqrt(3.0) / 6.0;
const double kCommutatorWeight = std::sqrt(3.0) / 12.0;

constexpr int kFieldScanPoints = 4001;

double max_field_norm(const EvolutionSpec& spec) {
  double peak = spec.field(0.5).norm();
  for (int i = 0; i < kFieldScanPoints; ++i) {
    const double s = static_cast<double>(i) / (kFieldScanPoints - 1);
    peak = std::max(peak, spec.field(s).norm());
  }
  return peak;
}

// Time stepping runs in extended precision: the excited-state amplitude can be
// 1e-8 of the ground amplitude, and double rounding over 1e6 steps would
// otherwise dominate its relative error.
using Real = long double;
using WideComplex = std::complex<Real>;

struct WideField {
  Real x = 0;
  Real y = 0;
  Real z = 0;
};

struct WideState {
  WideComplex alpha;
  WideComplex beta;
};

WideField widen(const FieldVector& h) { return {h.x, h.y, h.z}; }

QuantumState narrow(const WideState& psi) {
  return {Complex{static_cast<double>(psi.alpha.real()), static_cast<double>(psi.alpha.imag())},
          Complex{static_cast<double>(psi.beta.real()), static_cast<double>(psi.beta.imag())}};
}

WideField wide_magnus4_field(const WideField& a, const WideField& b, Real dt) {
  const Real w = std::sqrt(Real{3}) / 12 * dt;
  return {(a.x + b.x) / 2 - w * (b.y * a.z - b.z * a.y),
          (a.y + b.y) / 2 - w * (b.z * a.x - b.x * a.z),
          (a.z + b.z) / 2 - w * (b.x * a.y - b.y * a.x)};
}

WideState wide_step(const WideState& psi, const WideField& h, Real dt) {
  const Real magnitude = std::sqrt(h.x * h.x + h.y * h.y + h.z * h.z);
  if (magnitude == 0) return psi;
  const Real phi = magnitude * dt / 2;
  const Real c = std::cos(phi);
  const WideComplex i_sn{0, std::sin(phi) / magnitude};
  const WideComplex off_up{h.x, -h.y};
  const WideComplex off_down{h.x, h.y};
  return {c * psi.alpha + i_sn * (h.z * psi.alpha + off_up * psi.beta),
          c * psi.beta + i_sn * (off_down * psi.alpha - h.z * psi.beta)};
}

TrajectorySample make_sample(const EvolutionSpec& spec, double s, const QuantumState& psi) {
  return {s,
          psi,
          transition_probability(psi, s, spec.n, spec.schedule),
          bloch_vector(psi),
          residual_energy(psi, s, spec.n, spec.schedule)};
}

}  // namespace

QuantumState step(const QuantumState& psi, const FieldVector& h, double dt) {
  if (dt < 0.0) {
    throw std::invalid_argument("step: dt must be non-negative");
  }
  const double magnitude = h.norm();
  if (magnitude == 0.0 || dt == 0.0) {
    return psi;
  }
  const double phi = 0.5 * magnitude * dt;
  const double c = std::cos(phi);
  const Complex i_sn{0.0, std::sin(phi) / magnitude};
  const Complex off_up{h.x, -h.y};
  const Complex off_down{h.x, h.y};
  return {c * psi.alpha + i_sn * (h.z * psi.alpha + off_up * psi.beta),
          c * psi.beta + i_sn * (off_down * psi.alpha - h.z * psi.beta)};
}

FieldVector magnus4_field(const FieldVector& h_first, const FieldVector& h_second, double dt) {
  // Omega = dt/2 (A1 + A2) + sqrt(3) dt^2 / 12 [A2, A1] with A = (i/2) h.sigma,
  // and [a.sigma, b.sigma] = 2i (a x b).sigma.
  const FieldVector cross{h_second.y * h_first.z - h_second.z * h_first.y,
                          h_second.z * h_first.x - h_second.x * h_first.z,
                          h_second.x * h_first.y - h_second.y * h_first.x};
  return (h_first + h_second) * 0.5 - cross * (kCommutatorWeight * dt);
}

long long default_steps(double running_time) {
  return std::max<long long>(20000, static_cast<long long>(std::ceil(200.0 * running_time)));
}

EvolutionSpec::EvolutionSpec(const ProblemSize& size, double t, DrivingKind kind,
                             Schedule sched)
    : n(size), running_time(t), schedule(std::move(sched)), driving(kind, size, t) {}

long long EvolutionSpec::resolved_steps() const {
  return steps.value_or(default_steps(running_time));
}

FieldVector EvolutionSpec::field(double s) const {
  return grover_field(s, n, schedule) + driving_field(driving, s);
}

Trajectory evolve(const EvolutionSpec& spec) {
  if (!(spec.running_time > 0.0) || !std::isfinite(spec.running_time)) {
    throw std::invalid_argument("evolve: running time T must be positive and finite");
  }
  if (spec.driving.size().value() != spec.n.value() ||
      spec.driving.running_time() != spec.running_time) {
    throw std::invalid_argument("evolve: driving spec was built for a different (N, T)");
  }
  const long long steps = spec.resolved_steps();
  if (steps < 1) {
    throw std::invalid_argument("evolve: step count must be at least 1");
  }
  if (spec.max_samples < 2) {
    throw std::invalid_argument("evolve: max_samples must be at least 2");
  }
  const double peak = max_field_norm(spec);
  const auto required = static_cast<long long>(std::ceil(10.0 * spec.running_time * peak));
  if (steps < required) {
    throw InsufficientStepsError("step count " + std::to_string(steps) +
                                     " too small to resolve the field; need at least " +
                                     std::to_string(required),
                                 steps, required);
  }

  const double ds = 1.0 / static_cast<double>(steps);
  const Real dt = static_cast<Real>(spec.running_time) / static_cast<Real>(steps);
  const auto intervals = static_cast<long long>(spec.max_samples - 1);
  const long long stride = (steps + intervals - 1) / intervals;

  Trajectory out;
  out.steps = steps;
  out.samples.reserve(static_cast<std::size_t>(steps / stride + 2));

  const QuantumState start = initial_state(spec.n);
  WideState psi{start.alpha.real(), start.beta.real()};
  out.samples.push_back(make_sample(spec, 0.0, start));
  for (long long k = 0; k < steps; ++k) {
    const double base = static_cast<double>(k);
    WideField h;
    if (spec.integrator == Integrator::midpoint) {
      h = widen(spec.field((base + 0.5) * ds));
    } else {
      h = wide_magnus4_field(widen(spec.field((base + 0.5 - kGaussOffset) * ds)),
                             widen(spec.field((base + 0.5 + kGaussOffset) * ds)), dt);
    }
    psi = wide_step(psi, h, dt);
    const long long done = k + 1;
    if (done % stride == 0 || done == steps) {
      const double s = done == steps ? 1.0 : static_cast<double>(done) * ds;
      out.samples.push_back(make_sample(spec, s, narrow(psi)));
    }
  }
  out.final_state = narrow(psi);
  return out;
}

double transition_probability(const QuantumState& psi, double s, const ProblemSize& n,
                              const Schedule& sched) {
  return std::norm(inner(eigensystem(s, n, sched).v_plus, psi));
}

double transition_probability_complement(const QuantumState& psi, double s,
                                         const ProblemSize& n, const Schedule& sched) {
  return 1.0 - std::norm(inner(eigensystem(s, n, sched).v_minus, psi));
}

double residual_energy(const QuantumState& psi, double s, const ProblemSize& n,
                       const Schedule& sched) {
  const FieldVector h = grover_field(s, n, sched);
  const BlochVector r = bloch_vector(psi);
  const double energy = -0.5 * (h.x * r.x + h.y * r.y + h.z * r.z);
  return energy + 0.5 * h.norm();
}

}  // namespace groverad
