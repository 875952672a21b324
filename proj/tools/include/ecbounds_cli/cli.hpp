// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ecbounds::cli {

inline constexpr const char* kSchema = "ecbounds/1";

/// Exit codes of run().
enum Exit : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one invocation; args excludes the program name. The record goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The structured record an invocation prints with --format json. Throws
/// ecbounds::Error on domain errors and CLI11 exceptions on usage errors.
nlohmann::json record(const std::vector<std::string>& args);

/// Plain-text rendering of a record; reals with 15 significant digits.
std::string render_text(const nlohmann::json& record);

}  // namespace ecbounds::cli
