// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/io/manifest.hpp"

#include <filesystem>

#include "lhf/core/error.hpp"

#ifndef LHF_VERSION
#define LHF_VERSION "unknown"
#endif

namespace lhf {

RunManifest::RunManifest(std::string command, std::string config_text)
    : command_(std::move(command)), config_text_(std::move(config_text)) {}

bool RunManifest::all_passed() const {
  for (const auto& [name, ok] : validations_)
    if (!ok) return false;
  return true;
}

Json RunManifest::to_json() const {
  Json timings = Json::object();
  for (const auto& [phase, seconds] : timings_) timings[phase] = seconds;
  Json validations = Json::object();
  for (const auto& [name, ok] : validations_) validations[name] = ok;
  return Json{{"command", command_},     {"version", LHF_VERSION}, {"config", config_text_},
              {"timings_s", timings},    {"outputs", outputs_},    {"validations", validations},
              {"passed", all_passed()}};
}

void RunManifest::write(const std::string& path) const {
  namespace fs = std::filesystem;
  for (const std::string& out : outputs_) {
    std::error_code ec;
    if (!fs::is_regular_file(out, ec) || fs::file_size(out, ec) == 0)
      raise(ErrorCode::IoFailure, "missing or empty output " + out);
  }
  write_json(path, to_json());
}

}  // namespace lhf
