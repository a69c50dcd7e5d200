#pragma once

#include <string>

#include "bgo/config.hpp"
#include "bgo/experiment.hpp"

namespace bgo {

/// Header n,metric_mean,metric_stderr,samples_total,oracle_calls; one row per
/// budget; numbers in %.17g; LF line endings.
std::string format_csv(const RateResult& result);

/// {"slope": ..., "slope_stderr": ..., "config_echo": {...}}; slope fields are
/// null when no fit was possible.
std::string format_summary_json(const RateResult& result, const ExperimentConfig& config);

/// Log-log line chart of metric_mean against n.
std::string format_svg(const RateResult& result, const std::string& title);

/// Writes csv_path, plus the JSON summary and the SVG chart next to it
/// (same stem, .json and .svg). Throws std::runtime_error on I/O failure.
void write_results(const RateResult& result, const ExperimentConfig& config, const std::string& csv_path,
                   bool with_svg = true);

}  // namespace bgo
