#pragma once

#include <string>
#include <vector>

#include "qbc/experiments.hpp"

namespace qbc {

enum class ResultFormat { StructuredText, Csv };

ResultFormat format_from_name(const std::string& name);

// Canonical single-line JSON for a config; this exact string is the config
// echo embedded in results and printed by the CLI before running.
std::string config_to_text(const ExperimentConfig& config);
ExperimentConfig config_from_text(const std::string& text);

// Canonical JSON for protocol params alone (used by the honest-run echo).
std::string params_to_text(const ProtocolParams& params);

// structured-text: one JSON object per result per line, carrying the full
// config echo and metrics.
// csv: header kind,strategy,m,trials,estimate,ci_lo,ci_hi,<metric keys...>
// (metric keys sorted), values at 17 significant digits.
std::string serialize_result(const ExperimentResult& result, ResultFormat format);
std::string serialize_results(const std::vector<ExperimentResult>& results,
                              ResultFormat format);

ExperimentResult result_from_text(const std::string& text);

}  // namespace qbc
