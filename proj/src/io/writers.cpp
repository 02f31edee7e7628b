// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/io/writers.hpp"

#include <cstdio>
#include <fstream>

#include "lhf/core/error.hpp"

namespace lhf {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoFailure, path);
  out.write(content.data(), std::streamsize(content.size()));
  if (!out) raise(ErrorCode::IoFailure, path);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::string text;
  for (std::size_t i = 0; i < header.size(); ++i) text += (i ? "," : "") + header[i];
  text += '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size()) raise(ErrorCode::DimensionMismatch, "csv row width");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += format_double(row[i]);
    }
    text += '\n';
  }
  write_text(path, text);
}

void write_timeseries(const std::vector<ComparisonRecord>& records, const std::string& path) {
  if (records.empty()) raise(ErrorCode::PreconditionFailed, "no records");
  for (std::size_t i = 1; i < records.size(); ++i)
    if (!(records[i].t > records[i - 1].t))
      raise(ErrorCode::PreconditionFailed, "times out of order at row " + std::to_string(i));
  std::vector<std::vector<double>> rows;
  rows.reserve(records.size());
  for (const auto& r : records)
    rows.push_back({r.t, r.error_norm, r.apriori_bound, r.defect_bound, r.energy_exact, r.energy_hf, r.rdm_trace_dist});
  write_csv(path, {"t", "error_norm", "apriori_bound", "defect_bound", "energy_exact", "energy_hf", "rdm_trace_dist"}, rows);
}

Json to_json(const ComparisonSummary& s) {
  return Json{
      {"samples", s.samples},
      {"steps", s.steps},
      {"dimension", s.dimension},
      {"K", s.K},
      {"N", s.N},
      {"v_norm", s.v_norm},
      {"max_error_norm", s.max_error_norm},
      {"max_error_over_apriori", s.max_error_over_apriori},
      {"max_error_over_defect", s.max_error_over_defect},
      {"max_defect_over_apriori", s.max_defect_over_apriori},
      {"apriori_violations", s.apriori_violations},
      {"defect_violations", s.defect_violations},
      {"hierarchy_violations", s.hierarchy_violations},
      {"triangle_violations", s.triangle_violations},
      {"initial_defect_slope", s.initial_defect_slope},
      {"apriori_slope", s.apriori_slope},
      {"small_time_error_slope", s.small_time_error_slope},
      {"max_defect_norm", s.max_defect_norm},
      {"max_sector_leak", s.max_sector_leak},
      {"max_energy_drift_hf", s.max_energy_drift_hf},
      {"max_energy_drift_exact", s.max_energy_drift_exact},
      {"max_phase_modulus_dev", s.max_phase_modulus_dev},
      {"max_orth_drift", s.max_orth_drift},
      {"rdm_trace_dist_t0", s.rdm_trace_dist_t0},
      {"max_rdm_trace_dist", s.max_rdm_trace_dist},
  };
}

void write_json(const std::string& path, const Json& value) { write_text(path, value.dump(2) + "\n"); }

}  // namespace lhf
