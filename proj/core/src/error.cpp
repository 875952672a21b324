// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/error.hpp"

namespace ecbounds {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegreeLawViolation: return "DegreeLawViolation";
    case ErrorCode::TorsionDenominator: return "TorsionDenominator";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorCode::EnvelopeViolation: return "EnvelopeViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::CertificateViolation: return "CertificateViolation";
    case ErrorCode::AllTorsion: return "AllTorsion";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::BadParams: return "BadParams";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ecbounds
