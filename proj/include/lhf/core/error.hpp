// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lhf {

/// Failure categories raised across the library. Each maps onto one contract
/// violation of a public operation.
enum class ErrorCode {
  MalformedConfig,
  InvalidValue,
  GridMismatch,
  DegreeOutOfRange,
  TruncationTooSmall,
  OffGridDisplacement,
  GridTooCoarse,
  OrthonormalityFailure,
  TooLarge,
  LengthMismatch,
  SymmetryViolation,
  DimensionMismatch,
  ConvergenceFailure,
  NotOrthonormal,
  IndexOutOfRange,
  StepUnstable,
  NonFiniteValue,
  NotUnitary,
  SupportViolation,
  NotHermitian,
  PreconditionFailed,
  IoFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type; `code()` identifies the category and `detail()`
/// carries the offending key, index or measured deviation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void raise(ErrorCode code, std::string detail);

}  // namespace lhf
