// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace ecbounds {

/// A real quantity with its exact symbolic form when one exists.
struct NamedValue {
  std::string name;
  std::string exact;
  double value = 0.0;

  friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

/// lhs <= rhs, with slack = rhs - lhs.
struct Comparison {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

Comparison compare_le(std::string name, double lhs, double rhs, double relative_slack = 0.0);

/// Audit record of a bound: the formula it evaluates, every input and constant
/// that went in, intermediate values and the comparisons that were checked.
struct BoundCertificate {
  std::string formula_id;
  std::string anchor;
  std::vector<NamedValue> inputs;
  std::vector<NamedValue> constants;
  std::vector<NamedValue> intermediates;
  double value = 0.0;
  std::string exact;
  std::vector<Comparison> comparisons;

  bool all_hold() const;
  /// Looks through inputs, constants and intermediates; nullptr if absent.
  const NamedValue* find(const std::string& name) const;

  friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

void to_json(nlohmann::json& j, const NamedValue& v);
void from_json(const nlohmann::json& j, NamedValue& v);
void to_json(nlohmann::json& j, const Comparison& c);
void from_json(const nlohmann::json& j, Comparison& c);
void to_json(nlohmann::json& j, const BoundCertificate& c);
void from_json(const nlohmann::json& j, BoundCertificate& c);

/// Finite reals are JSON numbers (shortest round-trip form); non-finite values
/// become the strings "nan", "inf", "-inf".
nlohmann::json real_to_json(double v);
double real_from_json(const nlohmann::json& j);

}  // namespace ecbounds
