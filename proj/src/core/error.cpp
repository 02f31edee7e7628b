// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/core/error.hpp"

namespace lhf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedConfig: return "MalformedConfig";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::OffGridDisplacement: return "OffGridDisplacement";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::OrthonormalityFailure: return "OrthonormalityFailure";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::StepUnstable: return "StepUnstable";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string detail)
    : std::runtime_error(std::string(to_string(code)) + "(" + detail + ")"),
      code_(code),
      detail_(std::move(detail)) {}

void raise(ErrorCode code, std::string detail) {
  throw Error(code, std::move(detail));
}

}  // namespace lhf
