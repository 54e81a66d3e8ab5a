#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "groverad/driving.hpp"
#include "groverad/model.hpp"

namespace groverad {

/// Per-step propagator for a piecewise-sampled field.
///
/// midpoint: exp(-i H(t_k + dt/2) dt), second order.
/// magnus4:  two-point Gauss Magnus with the commutator term, fourth order.
///           For su(2) the commutator is a cross product, so each step is still
///           one closed-form 2x2 exponential.
enum class Integrator { midpoint, magnus4 };

/// Exact exp(-i H dt) psi for H = -(1/2) h.sigma:
/// U = cos(phi) I + i sin(phi) (h/|h|).sigma with phi = |h| dt / 2.
QuantumState step(const QuantumState& psi, const FieldVector& h, double dt);

/// Effective constant field whose exponential equals the fourth-order Magnus
/// step built from the fields at the two Gauss nodes (first node first).
FieldVector magnus4_field(const FieldVector& h_first, const FieldVector& h_second, double dt);

/// max(20000, ceil(200 T)).
long long default_steps(double running_time);

struct EvolutionSpec {
  EvolutionSpec(const ProblemSize& n, double running_time,
                DrivingKind driving = DrivingKind::none,
                Schedule schedule = Schedule::linear());

  ProblemSize n;
  double running_time;
  Schedule schedule;
  DrivingSpec driving;
  /// Overrides default_steps() when set.
  std::optional<long long> steps;
  Integrator integrator = Integrator::magnus4;
  /// Upper bound on stored samples, endpoints included (>= 2).
  std::size_t max_samples = 4001;

  long long resolved_steps() const;
  /// Total field H(s) + H_D(s).
  FieldVector field(double s) const;
};

struct TrajectorySample {
  double s;
  QuantumState psi;
  double p;  // excited-state population
  BlochVector bloch;
  double e_res;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  QuantumState final_state;
  long long steps = 0;

  double final_probability() const { return samples.back().p; }
};

/// Integrates i d/dt psi = H_T(t) psi from initial_state(N) over t in [0, T].
/// Throws InsufficientStepsError if steps < 10 T max|h|.
Trajectory evolve(const EvolutionSpec& spec);

/// Population of the undriven instantaneous excited state, |<e+(s)|psi>|^2.
double transition_probability(const QuantumState& psi, double s, const ProblemSize& n,
                              const Schedule& sched);

/// 1 - |<e-(s)|psi>|^2; agrees with transition_probability for unit psi.
double transition_probability_complement(const QuantumState& psi, double s,
                                         const ProblemSize& n, const Schedule& sched);

/// <psi|H(s)|psi> - e_-(s) for the undriven Hamiltonian.
double residual_energy(const QuantumState& psi, double s, const ProblemSize& n,
                       const Schedule& sched);

}  // namespace groverad
