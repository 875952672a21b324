// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/certificate.hpp"

#include <cmath>
#include <cstdlib>

#include "ecbounds/error.hpp"

namespace ecbounds {

Comparison compare_le(std::string name, double lhs, double rhs, double relative_slack) {
  Comparison c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.holds = lhs <= rhs + relative_slack * std::abs(rhs);
  return c;
}

bool BoundCertificate::all_hold() const {
  for (const auto& c : comparisons) {
    if (!c.holds) return false;
  }
  return true;
}

const NamedValue* BoundCertificate::find(const std::string& name) const {
  for (const auto* list : {&inputs, &constants, &intermediates}) {
    for (const auto& v : *list) {
      if (v.name == name) return &v;
    }
  }
  return nullptr;
}

nlohmann::json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') fail(ErrorCode::ParseError, "bad real '" + s + "'");
  return v;
}

void to_json(nlohmann::json& j, const NamedValue& v) {
  j = {{"name", v.name}, {"exact", v.exact}, {"value", real_to_json(v.value)}};
}

void from_json(const nlohmann::json& j, NamedValue& v) {
  v.name = j.at("name").get<std::string>();
  v.exact = j.at("exact").get<std::string>();
  v.value = real_from_json(j.at("value"));
}

void to_json(nlohmann::json& j, const Comparison& c) {
  j = {{"name", c.name},
       {"lhs", real_to_json(c.lhs)},
       {"rhs", real_to_json(c.rhs)},
       {"slack", real_to_json(c.slack)},
       {"holds", c.holds}};
}

void from_json(const nlohmann::json& j, Comparison& c) {
  c.name = j.at("name").get<std::string>();
  c.lhs = real_from_json(j.at("lhs"));
  c.rhs = real_from_json(j.at("rhs"));
  c.slack = real_from_json(j.at("slack"));
  c.holds = j.at("holds").get<bool>();
}

void to_json(nlohmann::json& j, const BoundCertificate& c) {
  j = {{"formula", c.formula_id},
       {"anchor", c.anchor},
       {"inputs", c.inputs},
       {"constants", c.constants},
       {"intermediates", c.intermediates},
       {"value", real_to_json(c.value)},
       {"exact", c.exact},
       {"comparisons", c.comparisons}};
}

void from_json(const nlohmann::json& j, BoundCertificate& c) {
  c.formula_id = j.at("formula").get<std::string>();
  c.anchor = j.at("anchor").get<std::string>();
  c.inputs = j.at("inputs").get<std::vector<NamedValue>>();
  c.constants = j.at("constants").get<std::vector<NamedValue>>();
  c.intermediates = j.at("intermediates").get<std::vector<NamedValue>>();
  c.value = real_from_json(j.at("value"));
  c.exact = j.at("exact").get<std::string>();
  c.comparisons = j.at("comparisons").get<std::vector<Comparison>>();
}

}  // namespace ecbounds
