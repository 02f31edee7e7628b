// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lhf/analysis/compare.hpp"

namespace lhf {

using Json = nlohmann::json;

/// 17 significant digits, enough to round-trip any binary64 value.
std::string format_double(double v);

/// Writes `content` byte for byte; raises IoFailure.
void write_text(const std::string& path, const std::string& content);

/// Comma-separated rows under a fixed header, LF line endings.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

inline constexpr const char* kTimeseriesHeader =
    "t,error_norm,apriori_bound,defect_bound,energy_exact,energy_hf,rdm_trace_dist";

/// Records must be non-empty with strictly increasing times; otherwise
/// PreconditionFailed is raised before anything is written.
void write_timeseries(const std::vector<ComparisonRecord>& records, const std::string& path);

Json to_json(const ComparisonSummary& summary);

/// Pretty-printed with sorted keys and a trailing newline.
void write_json(const std::string& path, const Json& value);

}  // namespace lhf
