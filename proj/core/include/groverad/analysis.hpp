#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groverad/driving.hpp"
#include "groverad/lambert_w.hpp"
#include "groverad/model.hpp"
#include "groverad/propagator.hpp"

namespace groverad {

/// How sweep() integrates each row.
///
/// At large T the final probability oscillates as sin^2(T Phi / 2) with
/// Phi = int_0^1 omega(s) ds, so the B/T^2 law is its upper envelope. Rows in
/// the top `envelope_decades` of the grid are therefore also sampled at
/// `envelope_samples` running times spread over one period 2 pi / Phi and the
/// maximum is kept as p_envelope.
struct SweepPolicy {
  /// Same step count for every run; default_steps(T) when empty.
  std::optional<long long> fixed_steps;
  Integrator integrator = Integrator::magnus4;
  /// 0 disables envelope sampling.
  int envelope_samples = 10;
  double envelope_decades = 1.0;
};

/// Dynamical phase per unit running time, int_0^1 omega(s) ds, linear schedule.
double phase_rate(const ProblemSize& n);

struct SweepRow {
  double t = 0.0;
  double p_final = 0.0;
  /// Max of P(1) over one oscillation period starting at t; NaN when not sampled.
  double p_envelope = std::numeric_limits<double>::quiet_NaN();
  bool ok = true;
  std::string error;
  /// |1 - ||psi(T)|||
  double norm_drift = 0.0;
};

struct SweepTable {
  long long n = 2;
  DrivingKind driving = DrivingKind::none;
  std::vector<SweepRow> rows;
};

/// Log-spaced grid with the given density, both ends included.
std::vector<double> log_grid(double t_min, double t_max, int points_per_decade);

/// Final transition probability for each running time. Rows run in parallel
/// on up to `threads` workers (0 = hardware concurrency); a failing row is
/// marked and the sweep continues. The result does not depend on `threads`.
SweepTable sweep(const ProblemSize& n, std::span<const double> t_grid, DrivingKind driving,
                 const SweepPolicy& policy = {}, unsigned threads = 0);

struct FitWindow {
  double t_lo = 0.0;
  double t_hi = 0.0;
};

struct ExponentialFit {
  double rate;       // A in exp(c - A T)
  double intercept;  // c
  double rms;
  std::size_t points;
};

struct PowerLawFit {
  double slope;
  double intercept;         // ln P = intercept + slope ln T
  double constrained_slope;
  double prefactor;         // exp of the intercept with the slope held fixed
  double rms;
  double rms_constrained;
  std::size_t points;
};

enum class FitSeries { raw, envelope };

/// Least squares on (T, ln P) over rows with t_lo <= T <= t_hi.
ExponentialFit fit_exponential(const SweepTable& table, const FitWindow& window,
                               FitSeries series = FitSeries::raw);

/// Least squares on (ln T, ln P); also fits the prefactor with the slope fixed.
PowerLawFit fit_power_law(const SweepTable& table, const FitWindow& window,
                          double constrained_slope = -2.0, FitSeries series = FitSeries::raw);

struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double slope = 0.0;
  /// Crossing of the two fitted curves, exp(c - A T) = B / T^2.
  double tc_fit = 0.0;
  /// -(2/A) W_{-1}(-A sqrt(B)/2).
  double tc_formula = 0.0;
  FitWindow exponential_window;
  FitWindow power_window;
  double rms_exponential = 0.0;
  double rms_power = 0.0;
  /// True when the power-law fit used p_envelope.
  bool power_envelope = false;
  /// Set when tc_formula falls outside the gap between the two windows.
  bool extrapolated = false;
  ExponentialFit exponential{};
  PowerLawFit power{};
};

/// Largest rms (ln units) accepted for the short-time exponential window.
inline constexpr double kExponentialWindowRms = 0.15;

/// Fits both asymptotic regimes of a sweep.
///
/// The power-law window is the top decade of the grid, fitted on p_envelope
/// when every row there carries one. The exponential window
/// is the longest prefix of rows with T < Tc/2 whose fit rms stays below
/// kExponentialWindowRms, where Tc starts from the A ~ pi/4N, B ~ 4/N scaling
/// and is refined once from the first fit.
FitResult fit_sweep(const SweepTable& table);

/// Root of c - A T = ln B - 2 ln T with T > 2/A, or NaN if the curves never cross.
double fitted_crossing(double rate, double intercept, double prefactor);

struct ScanEntry {
  long long n = 2;
  bool ok = true;
  std::string error;
  FitResult fit;
};

/// sweep + fit_sweep for every size; failures are recorded per entry.
std::vector<ScanEntry> size_scan(std::span<const long long> sizes, std::span<const double> t_grid,
                                 DrivingKind driving = DrivingKind::none,
                                 const SweepPolicy& policy = {}, unsigned threads = 0);

struct AdiabaticCondition {
  double numerator;    // max_s |<E1(s)| dH/ds |E0(s)>|
  double denominator;  // min_s (E1 - E0)^2
  double rhs;          // numerator / denominator
  double s_numerator;
  double s_denominator;
};

inline constexpr int kAdiabaticGridIntervals = 10000;

/// Adiabatic-condition terms for H(s) + H_D(s) on an s-grid of
/// kAdiabaticGridIntervals intervals. dH/ds is analytic for the linear
/// schedule and a centered difference otherwise.
AdiabaticCondition adiabatic_condition(const ProblemSize& n, double running_time,
                                       DrivingKind driving,
                                       const Schedule& sched = Schedule::linear());

}  // namespace groverad
