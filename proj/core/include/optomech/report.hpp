#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "optomech/sweep.hpp"

namespace optomech {

enum class OutputFormat { csv, json };

std::optional<OutputFormat> parse_output_format(std::string_view s);

/// 12 significant digits, shortest of fixed/exponent form ("%.12g").
std::string format_number(double x);

/// One header line, then one line per row; LF line endings. Measure columns are
/// empty for unstable/marginal branches and in mean-field mode.
void write_csv(std::ostream& out, const SweepResult& result);

/// {spec, derived_quantities (keyed by series label), rows}.
nlohmann::json sweep_report(const SweepResult& result);

/// Writes to `destination` and returns the number of bytes written. I/O
/// failures are raised as std::runtime_error with the system message.
std::size_t emit(const SweepResult& result, OutputFormat format, const std::filesystem::path& destination);
std::size_t emit(const SweepResult& result, OutputFormat format, std::ostream& out);

/// Every mean-field branch of one configuration, with stability and measures.
nlohmann::json point_report(const SystemParams& params);

}  // namespace optomech
