#include "report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace groverad::cli {

namespace {

std::string format_17g(double value) {
  std::array<char, 40> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.17g", value);
  return {buf.data(), static_cast<std::size_t>(len)};
}

Json number_or_null(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

void write(const Json& node, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (node.type()) {
    case Json::value_t::object: {
      if (node.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : node.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(key).dump();
        out += ": ";
        write(value, out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (node.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < node.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        write(node[i], out, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double value = node.get<double>();
      out += std::isfinite(value) ? format_17g(value) : "null";
      return;
    }
    default:
      out += node.dump();
      return;
  }
}

}  // namespace

std::string format_float(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::scientific);
  std::string scientific(buf.data(), end);
  const auto e = scientific.find('e');
  const int exponent = std::atoi(scientific.c_str() + e + 1);
  if (std::abs(exponent) >= 5) return scientific;
  auto [fixed_end, fixed_ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
  return {buf.data(), fixed_end};
}

std::string emit_json(const Json& document) {
  std::string out;
  write(document, out, 0);
  out += "\n";
  return out;
}

Json fit_summary(const FitResult& fit, const SweepTable& table) {
  Json doc;
  doc["n"] = table.n;
  doc["driving"] = std::string(to_string(table.driving));
  doc["a"] = number_or_null(fit.a);
  doc["b"] = number_or_null(fit.b);
  doc["slope"] = number_or_null(fit.slope);
  doc["tc_fit"] = number_or_null(fit.tc_fit);
  doc["tc_formula"] = number_or_null(fit.tc_formula);
  doc["windows"] = {
      {"exponential", {fit.exponential_window.t_lo, fit.exponential_window.t_hi}},
      {"power_law", {fit.power_window.t_lo, fit.power_window.t_hi}},
  };
  doc["rms"] = {{"exponential", number_or_null(fit.rms_exponential)},
                {"power_law", number_or_null(fit.rms_power)}};
  Json grid;
  grid["t_min"] = table.rows.empty() ? 0.0 : table.rows.front().t;
  grid["t_max"] = table.rows.empty() ? 0.0 : table.rows.back().t;
  grid["points"] = table.rows.size();
  grid["power_law_envelope"] = fit.power_envelope;
  doc["grid"] = grid;
  return doc;
}

std::string emit_fit_summary(const FitResult& fit, const SweepTable& table) {
  return emit_json(fit_summary(fit, table));
}

}  // namespace groverad::cli
