// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecbounds {

enum class ErrorCode {
  SingularCurve,
  CurveMismatch,
  NotOnCurve,
  ParseError,
  DegreeLawViolation,
  TorsionDenominator,
  AllZero,
  PrecisionUnreachable,
  EnvelopeViolation,
  BudgetExceeded,
  NotSquare,
  CertificateViolation,
  AllTorsion,
  SearchExhausted,
  BadParams,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every ecbounds operation. The code identifies the
/// failure class; the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace ecbounds
