// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "lhf/io/writers.hpp"

namespace lhf {

/// Record of one CLI run: the config it read, the code version, phase
/// timings, written files and built-in validation outcomes. Timings vary
/// between runs; everything else is reproducible.
class RunManifest {
 public:
  RunManifest(std::string command, std::string config_text);

  /// Times `fn` under `phase` and returns its result.
  template <typename Fn>
  auto timed(const std::string& phase, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    struct Stop {
      RunManifest* self;
      std::string phase;
      std::chrono::steady_clock::time_point start;
      ~Stop() {
        self->timings_.emplace_back(
            phase, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      }
    } stop{this, phase, start};
    return fn();
  }

  void add_output(const std::string& path) { outputs_.push_back(path); }
  void add_validation(const std::string& name, bool passed) { validations_.emplace_back(name, passed); }
  bool all_passed() const;

  Json to_json() const;

  /// Checks every listed output exists and is non-empty, then writes the
  /// manifest itself.
  void write(const std::string& path) const;

 private:
  std::string command_;
  std::string config_text_;
  std::vector<std::pair<std::string, double>> timings_;
  std::vector<std::string> outputs_;
  std::vector<std::pair<std::string, bool>> validations_;
};

}  // namespace lhf
