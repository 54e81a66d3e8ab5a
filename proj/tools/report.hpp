#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "groverad/analysis.hpp"

namespace groverad::cli {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal; scientific notation once |exponent| >= 5.
std::string format_float(double value);

/// Serializes with fixed key order, two-space indent, LF endings and floats
/// printed with 17 significant digits. Non-finite floats become null.
std::string emit_json(const Json& document);

/// Summary object with keys n, driving, a, b, slope, tc_fit, tc_formula,
/// windows, rms, grid, in that order.
Json fit_summary(const FitResult& fit, const SweepTable& table);

std::string emit_fit_summary(const FitResult& fit, const SweepTable& table);

}  // namespace groverad::cli
