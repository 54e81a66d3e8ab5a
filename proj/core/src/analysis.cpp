#include "groverad/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "groverad/errors.hpp"

namespace groverad {

namespace {

constexpr std::size_t kMinFitPoints = 5;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct LineFit {
  double slope;
  double intercept;
  double rms;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const auto count = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    ss += r * r;
  }
  return {slope, intercept, std::sqrt(ss / count)};
}

struct WindowData {
  std::vector<double> t;
  std::vector<double> log_p;
};

WindowData collect(const SweepTable& table, const FitWindow& window, FitSeries series,
                   const char* operation) {
  WindowData data;
  for (const auto& row : table.rows) {
    if (!row.ok || row.t < window.t_lo || row.t > window.t_hi) continue;
    const double p = series == FitSeries::raw ? row.p_final : row.p_envelope;
    if (std::isnan(p)) {
      throw DomainError(operation, std::string(series == FitSeries::raw ? "raw" : "envelope") +
                                       " value missing at T = " + std::to_string(row.t));
    }
    if (!(p > 0.0)) {
      throw DomainError(operation, "non-positive probability at T = " + std::to_string(row.t));
    }
    data.t.push_back(row.t);
    data.log_p.push_back(std::log(p));
  }
  if (data.t.size() < kMinFitPoints) {
    throw DomainError(operation, "fit window holds " + std::to_string(data.t.size()) +
                                     " rows, need at least " + std::to_string(kMinFitPoints));
  }
  if (data.t.front() == data.t.back()) {
    throw DomainError(operation, "fit window has no spread in T");
  }
  return data;
}

std::vector<const SweepRow*> usable_rows(const SweepTable& table) {
  std::vector<const SweepRow*> rows;
  for (const auto& row : table.rows) {
    if (row.ok && row.p_final > 0.0) rows.push_back(&row);
  }
  return rows;
}

// Longest prefix of usable rows below `limit` whose exponential fit has rms under
// the threshold.
FitWindow select_exponential_window(const SweepTable& table, double limit) {
  const auto rows = usable_rows(table);
  std::size_t count = 0;
  while (count < rows.size() && rows[count]->t < limit) ++count;
  for (std::size_t len = count; len >= kMinFitPoints; --len) {
    const FitWindow window{rows.front()->t, rows[len - 1]->t};
    if (fit_exponential(table, window).rms < kExponentialWindowRms) return window;
  }
  throw DomainError("fit_sweep", "no exponential window below T = " + std::to_string(limit) +
                                     " fits within rms " +
                                     std::to_string(kExponentialWindowRms));
}

}  // namespace

std::vector<double> log_grid(double t_min, double t_max, int points_per_decade) {
  if (!(t_min > 0.0) || !(t_max > t_min) || points_per_decade < 1) {
    throw std::invalid_argument("log_grid: need 0 < t_min < t_max and points_per_decade >= 1");
  }
  const double decades = std::log10(t_max / t_min);
  const auto intervals =
      std::max(1, static_cast<int>(std::lround(decades * points_per_decade)));
  std::vector<double> grid(static_cast<std::size_t>(intervals) + 1);
  const double lo = std::log10(t_min);
  const double hi = std::log10(t_max);
  for (int i = 0; i <= intervals; ++i) {
    grid[static_cast<std::size_t>(i)] =
        std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) / intervals);
  }
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

double phase_rate(const ProblemSize& n) {
  // Composite Simpson; omega is smooth on [0, 1].
  constexpr int intervals = 2000;
  const Schedule linear = Schedule::linear();
  double sum = gap(0.0, n, linear) + gap(1.0, n, linear);
  for (int i = 1; i < intervals; ++i) {
    const double s = static_cast<double>(i) / intervals;
    sum += (i % 2 == 1 ? 4.0 : 2.0) * gap(s, n, linear);
  }
  return sum / (3.0 * intervals);
}

SweepTable sweep(const ProblemSize& n, std::span<const double> t_grid, DrivingKind driving,
                 const SweepPolicy& policy, unsigned threads) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
      throw std::invalid_argument("sweep: T grid must be positive and strictly increasing");
    }
  }
  if (policy.envelope_samples < 0) {
    throw std::invalid_argument("sweep: envelope_samples must be non-negative");
  }
  SweepTable table;
  table.n = n.value();
  table.driving = driving;
  table.rows.resize(t_grid.size());
  if (t_grid.empty()) return table;

  // One task per evolution: sample 0 is the grid point itself, samples
  // 1..M-1 walk across one oscillation period for envelope rows.
  const double envelope_from = t_grid.back() * std::pow(10.0, -policy.envelope_decades);
  const double period = 2.0 * std::numbers::pi / phase_rate(n);
  const auto samples = static_cast<std::size_t>(std::max(1, policy.envelope_samples));
  const auto is_envelope_row = [&](double t) {
    return policy.envelope_samples > 0 && t >= envelope_from;
  };
  struct Task {
    std::size_t row;
    std::size_t sample;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const std::size_t count = is_envelope_row(t_grid[i]) ? samples : 1;
    for (std::size_t j = 0; j < count; ++j) tasks.push_back({i, j});
  }
  std::vector<double> results(tasks.size(), kNaN);
  std::vector<double> drifts(tasks.size(), 0.0);
  std::vector<std::string> errors(tasks.size());

  auto run_task = [&](std::size_t k) {
    const Task& task = tasks[k];
    const double t = t_grid[task.row] + period * static_cast<double>(task.sample) /
                                            static_cast<double>(samples);
    try {
      EvolutionSpec spec(n, t, driving);
      spec.steps = policy.fixed_steps;
      spec.integrator = policy.integrator;
      spec.max_samples = 2;
      const Trajectory trajectory = evolve(spec);
      results[k] = trajectory.final_probability();
      drifts[k] = std::abs(1.0 - trajectory.final_state.norm());
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::clamp<unsigned>(workers, 1U, static_cast<unsigned>(tasks.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) run_task(k);
  } else {
    // Largest T first so the expensive runs do not end up on one worker.
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
          run_task(tasks.size() - 1 - k);
        }
      });
    }
  }

  for (std::size_t i = 0; i < table.rows.size(); ++i) table.rows[i].t = t_grid[i];
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    SweepRow& row = table.rows[tasks[k].row];
    if (!errors[k].empty()) {
      if (row.ok) row.error = errors[k];
      row.ok = false;
      continue;
    }
    row.norm_drift = std::max(row.norm_drift, drifts[k]);
    if (tasks[k].sample == 0) row.p_final = results[k];
    if (is_envelope_row(row.t)) {
      row.p_envelope = std::isnan(row.p_envelope) ? results[k] : std::max(row.p_envelope, results[k]);
    }
  }
  for (auto& row : table.rows) {
    if (!row.ok) {
      row.p_final = kNaN;
      row.p_envelope = kNaN;
    }
  }
  return table;
}

ExponentialFit fit_exponential(const SweepTable& table, const FitWindow& window,
                               FitSeries series) {
  const WindowData data = collect(table, window, series, "fit_exponential");
  const LineFit line = least_squares(data.t, data.log_p);
  return {-line.slope, line.intercept, line.rms, data.t.size()};
}

PowerLawFit fit_power_law(const SweepTable& table, const FitWindow& window,
                          double constrained_slope, FitSeries series) {
  const WindowData data = collect(table, window, series, "fit_power_law");
  std::vector<double> log_t(data.t.size());
  std::transform(data.t.begin(), data.t.end(), log_t.begin(), [](double t) { return std::log(t); });
  const LineFit line = least_squares(log_t, data.log_p);

  // With the slope fixed, the least-squares intercept is the mean of ln P - k ln T.
  const auto count = static_cast<double>(log_t.size());
  double intercept = 0.0;
  for (std::size_t i = 0; i < log_t.size(); ++i) {
    intercept += data.log_p[i] - constrained_slope * log_t[i];
  }
  intercept /= count;
  double ss = 0.0;
  for (std::size_t i = 0; i < log_t.size(); ++i) {
    const double r = data.log_p[i] - (intercept + constrained_slope * log_t[i]);
    ss += r * r;
  }
  return {line.slope,
          line.intercept,
          constrained_slope,
          std::exp(intercept),
          line.rms,
          std::sqrt(ss / count),
          log_t.size()};
}

double fitted_crossing(double rate, double intercept, double prefactor) {
  if (!(rate > 0.0) || !(prefactor > 0.0)) return kNaN;
  // gap(T) = (c - A T) - (ln B - 2 ln T) peaks at T = 2/A and decreases after.
  const auto gap = [&](double t) {
    return intercept - rate * t - std::log(prefactor) + 2.0 * std::log(t);
  };
  double lo = 2.0 / rate;
  if (!(gap(lo) > 0.0)) return kNaN;
  double hi = 2.0 * lo;
  while (gap(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) return kNaN;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

FitResult fit_sweep(const SweepTable& table) {
  const auto rows = usable_rows(table);
  if (rows.size() < 2 * kMinFitPoints) {
    throw DomainError("fit_sweep", "sweep has too few usable rows");
  }
  FitResult out;
  const double t_max = rows.back()->t;
  out.power_window = {t_max / 10.0, t_max};
  out.power_envelope = std::all_of(rows.begin(), rows.end(), [&](const SweepRow* row) {
    return row->t < out.power_window.t_lo || row->p_envelope > 0.0;
  });
  out.power = fit_power_law(table, out.power_window, -2.0,
                            out.power_envelope ? FitSeries::envelope : FitSeries::raw);

  const double nn = static_cast<double>(table.n);
  double tc_estimate = critical_time(std::numbers::pi / (4.0 * nn), 4.0 / nn);
  for (int pass = 0; pass < 2; ++pass) {
    out.exponential_window = select_exponential_window(table, 0.5 * tc_estimate);
    out.exponential = fit_exponential(table, out.exponential_window);
    if (pass == 0) {
      try {
        tc_estimate = critical_time(out.exponential.rate, out.power.prefactor);
      } catch (const DomainError&) {
        break;
      }
    }
  }

  out.a = out.exponential.rate;
  out.b = out.power.prefactor;
  out.slope = out.power.slope;
  out.rms_exponential = out.exponential.rms;
  out.rms_power = out.power.rms;
  try {
    out.tc_formula = critical_time(out.a, out.b);
  } catch (const DomainError&) {
    out.tc_formula = kNaN;
  }
  out.tc_fit = fitted_crossing(out.a, out.exponential.intercept, out.b);
  out.extrapolated = !(out.tc_formula >= out.exponential_window.t_hi &&
                       out.tc_formula <= out.power_window.t_lo);
  return out;
}

std::vector<ScanEntry> size_scan(std::span<const long long> sizes, std::span<const double> t_grid,
                                 DrivingKind driving, const SweepPolicy& policy,
                                 unsigned threads) {
  std::vector<ScanEntry> out;
  out.reserve(sizes.size());
  for (const long long n : sizes) {
    ScanEntry entry;
    entry.n = n;
    try {
      entry.fit = fit_sweep(sweep(ProblemSize(n), t_grid, driving, policy, threads));
    } catch (const std::exception& e) {
      entry.ok = false;
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

AdiabaticCondition adiabatic_condition(const ProblemSize& n, double running_time,
                                       DrivingKind driving, const Schedule& sched) {
  const DrivingSpec spec(driving, n, running_time);
  const auto total_field = [&](double s) {
    return grover_field(s, n, sched) + driving_field(spec, s);
  };
  const double nn = n.as_double();
  const auto field_derivative = [&](double s) -> FieldVector {
    if (sched.is_linear()) {
      const FieldVector base{-2.0 * std::sqrt(nn - 1.0) / nn, 0.0, (2.0 * nn - 2.0) / nn};
      return base + driving_field_derivative(spec, s);
    }
    constexpr double h = 1e-6;
    const double lo = std::max(0.0, s - h);
    const double hi = std::min(1.0, s + h);
    return (total_field(hi) - total_field(lo)) * (1.0 / (hi - lo));
  };

  AdiabaticCondition out{0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0};
  for (int i = 0; i <= kAdiabaticGridIntervals; ++i) {
    const double s = static_cast<double>(i) / kAdiabaticGridIntervals;
    const FieldVector h = total_field(s);
    const Eigensystem eig = eigensystem(h);
    const double element =
        std::abs(inner(eig.v_plus, apply_hamiltonian(field_derivative(s), eig.v_minus)));
    const double gap_squared = h.dot(h);
    if (element > out.numerator) {
      out.numerator = element;
      out.s_numerator = s;
    }
    if (gap_squared < out.denominator) {
      out.denominator = gap_squared;
      out.s_denominator = s;
    }
  }
  out.rhs = out.numerator / out.denominator;
  return out;
}

}  // namespace groverad
