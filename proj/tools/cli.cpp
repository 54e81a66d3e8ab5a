#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "groverad/analysis.hpp"
#include "groverad/errors.hpp"
#include "groverad/propagator.hpp"
#include "report.hpp"

namespace groverad::cli {

namespace {

enum class Format { csv, json };

struct RunConfig {
  long long n = 0;
  double t = 0.0;
  double t_min = 1.0;
  double t_max = 1e4;
  int points_per_decade = 50;
  std::string driving = "none";
  std::optional<long long> steps;
  std::string out = "-";
  std::string summary;
  Format format = Format::csv;
  int points = 1001;
  std::vector<long long> sizes{2, 10, 20};
  int envelope_samples = 10;
  unsigned threads = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DrivingKind driving_kind(const RunConfig& cfg) {
  if (auto kind = parse_driving_kind(cfg.driving)) return *kind;
  throw UsageError("unknown driving '" + cfg.driving +
                   "', expected one of none, exact, const_min, const_max");
}

void write_file(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

std::string summary_path(const RunConfig& cfg) {
  if (!cfg.summary.empty()) return cfg.summary;
  if (cfg.out == "-") return {};
  return std::filesystem::path(cfg.out).replace_extension(".json").string();
}

SweepPolicy sweep_policy(const RunConfig& cfg) {
  SweepPolicy policy;
  policy.fixed_steps = cfg.steps;
  policy.envelope_samples = cfg.envelope_samples;
  return policy;
}

std::string join_csv(std::initializer_list<double> values) {
  std::string line;
  bool first = true;
  for (double v : values) {
    if (!first) line += ',';
    first = false;
    line += format_float(v);
  }
  line += '\n';
  return line;
}

int run_evolve(const RunConfig& cfg, std::ostream& out) {
  EvolutionSpec spec(ProblemSize(cfg.n), cfg.t, driving_kind(cfg));
  spec.steps = cfg.steps;
  const Trajectory trajectory = evolve(spec);

  if (cfg.format == Format::json) {
    Json doc;
    doc["n"] = cfg.n;
    doc["t"] = cfg.t;
    doc["driving"] = cfg.driving;
    doc["steps"] = trajectory.steps;
    Json samples = Json::array();
    for (const auto& sample : trajectory.samples) {
      samples.push_back({{"s", sample.s},
                         {"re_alpha", sample.psi.alpha.real()},
                         {"im_alpha", sample.psi.alpha.imag()},
                         {"re_beta", sample.psi.beta.real()},
                         {"im_beta", sample.psi.beta.imag()},
                         {"p", sample.p},
                         {"rx", sample.bloch.x},
                         {"ry", sample.bloch.y},
                         {"rz", sample.bloch.z},
                         {"e_res", sample.e_res}});
    }
    doc["samples"] = std::move(samples);
    write_file(cfg.out, emit_json(doc), out);
    return kSuccess;
  }

  std::string csv = "s,re_alpha,im_alpha,re_beta,im_beta,p,rx,ry,rz,e_res\n";
  for (const auto& sample : trajectory.samples) {
    csv += join_csv({sample.s, sample.psi.alpha.real(), sample.psi.alpha.imag(),
                     sample.psi.beta.real(), sample.psi.beta.imag(), sample.p, sample.bloch.x,
                     sample.bloch.y, sample.bloch.z, sample.e_res});
  }
  write_file(cfg.out, csv, out);
  return kSuccess;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  const ProblemSize n(cfg.n);
  const DrivingKind kind = driving_kind(cfg);
  const auto grid = log_grid(cfg.t_min, cfg.t_max, cfg.points_per_decade);
  const SweepTable table = sweep(n, grid, kind, sweep_policy(cfg), cfg.threads);

  if (cfg.format == Format::csv) {
    std::string csv = "t,p_final\n";
    for (const auto& row : table.rows) csv += join_csv({row.t, row.p_final});
    write_file(cfg.out, csv, out);
  }
  for (const auto& row : table.rows) {
    if (!row.ok) throw NumericalError("sweep", "row T = " + format_float(row.t) + ": " + row.error);
  }
  const FitResult fit = fit_sweep(table);
  const std::string summary = emit_fit_summary(fit, table);
  if (cfg.format == Format::json) {
    write_file(cfg.out, summary, out);
  } else if (const auto path = summary_path(cfg); !path.empty()) {
    write_file(path, summary, out);
  }
  return kSuccess;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
  if (cfg.points < 2) throw UsageError("--points must be at least 2");
  const DrivingSpec spec(driving_kind(cfg), ProblemSize(cfg.n), cfg.t);
  if (cfg.format == Format::json) {
    Json doc;
    doc["n"] = cfg.n;
    doc["t"] = cfg.t;
    doc["driving"] = cfg.driving;
    Json rows = Json::array();
    for (int i = 0; i < cfg.points; ++i) {
      const double s = static_cast<double>(i) / (cfg.points - 1);
      const DrivenLevels levels = driven_spectrum(s, spec);
      rows.push_back({{"s", s}, {"e0", levels.e0}, {"e1", levels.e1}});
    }
    doc["levels"] = std::move(rows);
    write_file(cfg.out, emit_json(doc), out);
    return kSuccess;
  }
  std::string csv = "s,e0,e1\n";
  for (int i = 0; i < cfg.points; ++i) {
    const double s = static_cast<double>(i) / (cfg.points - 1);
    const DrivenLevels levels = driven_spectrum(s, spec);
    csv += join_csv({s, levels.e0, levels.e1});
  }
  write_file(cfg.out, csv, out);
  return kSuccess;
}

int run_scan(const RunConfig& cfg, std::ostream& out) {
  for (const long long n : cfg.sizes) (void)ProblemSize(n);
  const DrivingKind kind = driving_kind(cfg);
  const auto grid = log_grid(cfg.t_min, cfg.t_max, cfg.points_per_decade);

  std::string csv = "n,a,b,tc_fit,tc_formula\n";
  Json summaries = Json::array();
  std::string first_error;
  for (const long long n : cfg.sizes) {
    const SweepTable table = sweep(ProblemSize(n), grid, kind, sweep_policy(cfg), cfg.threads);
    FitResult fit;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
      fit = fit_sweep(table);
    } catch (const NumericalError& e) {
      if (first_error.empty()) first_error = "N = " + std::to_string(n) + ": " + e.what();
      fit.a = fit.b = fit.slope = fit.tc_fit = fit.tc_formula = nan;
    }
    csv += std::to_string(n) + "," + join_csv({fit.a, fit.b, fit.tc_fit, fit.tc_formula});
    summaries.push_back(fit_summary(fit, table));
  }
  write_file(cfg.out, cfg.format == Format::csv ? csv : emit_json(summaries), out);
  if (!first_error.empty()) throw NumericalError("size_scan", first_error);
  return kSuccess;
}

int run_adiabatic_check(const RunConfig& cfg, std::ostream& out) {
  const AdiabaticCondition result =
      adiabatic_condition(ProblemSize(cfg.n), cfg.t, driving_kind(cfg));
  if (cfg.format == Format::json) {
    Json doc;
    doc["n"] = cfg.n;
    doc["t"] = cfg.t;
    doc["driving"] = cfg.driving;
    doc["numerator"] = result.numerator;
    doc["denominator"] = result.denominator;
    doc["rhs"] = result.rhs;
    doc["s_numerator"] = result.s_numerator;
    doc["s_denominator"] = result.s_denominator;
    write_file(cfg.out, emit_json(doc), out);
  } else {
    write_file(cfg.out,
               "numerator,denominator,rhs,s_numerator,s_denominator\n" +
                   join_csv({result.numerator, result.denominator, result.rhs,
                             result.s_numerator, result.s_denominator}),
               out);
  }
  return kSuccess;
}

const CLI::Validator kSizeCheck(
    [](std::string& value) -> std::string {
      try {
        if (std::stoll(value) >= 2) return {};
      } catch (const std::exception&) {
      }
      return "database size N must satisfy N >= 2, got " + value;
    },
    "N>=2");

void add_format(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}}));
}

void add_driving(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--driving", cfg.driving, "none | exact | const_min | const_max")
      ->check(CLI::IsMember({"none", "exact", "const_min", "const_max"}));
}

void add_grid(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--t-min", cfg.t_min, "Smallest running time")->check(CLI::PositiveNumber);
  cmd.add_option("--t-max", cfg.t_max, "Largest running time")->check(CLI::PositiveNumber);
  cmd.add_option("--points-per-decade", cfg.points_per_decade, "Log-grid density")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--envelope-samples", cfg.envelope_samples,
                 "Runs per oscillation period for the large-T envelope (0 disables)")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Two-level simulation of Grover's adiabatic search", "groverad"};
  app.require_subcommand(1);

  auto* evolve_cmd = app.add_subcommand("evolve", "Trajectory of one evolution (s, psi, P, Bloch, E_res)");
  evolve_cmd->add_option("--n", cfg.n, "Database size N")->required()->check(kSizeCheck);
  evolve_cmd->add_option("--t", cfg.t, "Running time T")->required();
  add_driving(*evolve_cmd, cfg);
  evolve_cmd->add_option("--steps", cfg.steps, "Step count override");
  evolve_cmd->add_option("--out", cfg.out, "Output path ('-' for stdout)");
  add_format(*evolve_cmd, cfg);

  auto* sweep_cmd = app.add_subcommand("sweep", "Final transition probability versus T, with fits");
  sweep_cmd->add_option("--n", cfg.n, "Database size N")->required()->check(kSizeCheck);
  add_grid(*sweep_cmd, cfg);
  add_driving(*sweep_cmd, cfg);
  sweep_cmd->add_option("--steps", cfg.steps, "Step count override");
  sweep_cmd->add_option("--out", cfg.out, "Output path ('-' for stdout)");
  sweep_cmd->add_option("--summary", cfg.summary, "JSON summary path (default: out with .json)");
  add_format(*sweep_cmd, cfg);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Instantaneous levels of H + H_D");
  spectrum_cmd->add_option("--n", cfg.n, "Database size N")->required()->check(kSizeCheck);
  spectrum_cmd->add_option("--t", cfg.t, "Running time T")->required();
  add_driving(*spectrum_cmd, cfg);
  spectrum_cmd->add_option("--points", cfg.points, "Number of s samples");
  spectrum_cmd->add_option("--out", cfg.out, "Output path ('-' for stdout)");
  add_format(*spectrum_cmd, cfg);

  auto* scan_cmd = app.add_subcommand("scan", "Fitted A, B and Tc for several sizes");
  scan_cmd->add_option("--ns", cfg.sizes, "Database sizes")->delimiter(',');
  add_grid(*scan_cmd, cfg);
  add_driving(*scan_cmd, cfg);
  scan_cmd->add_option("--steps", cfg.steps, "Step count override");
  scan_cmd->add_option("--out", cfg.out, "Output path ('-' for stdout)");
  add_format(*scan_cmd, cfg);

  auto* check_cmd =
      app.add_subcommand("adiabatic-check", "Numerator and denominator of the adiabatic condition");
  check_cmd->add_option("--n", cfg.n, "Database size N")->required()->check(kSizeCheck);
  check_cmd->add_option("--t", cfg.t, "Running time T")->required();
  add_driving(*check_cmd, cfg);
  check_cmd->add_option("--out", cfg.out, "Output path ('-' for stdout)");
  add_format(*check_cmd, cfg);

  std::vector<const char*> argv{"groverad"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "groverad: usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*evolve_cmd) return run_evolve(cfg, out);
    if (*sweep_cmd) return run_sweep(cfg, out);
    if (*spectrum_cmd) return run_spectrum(cfg, out);
    if (*scan_cmd) return run_scan(cfg, out);
    return run_adiabatic_check(cfg, out);
  } catch (const UsageError& e) {
    err << "groverad: usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "groverad: usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalError& e) {
    err << "groverad: numerical failure in " << e.operation() << ": " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "groverad: error: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace groverad::cli
