// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/constants.hpp"

#include <algorithm>
#include <cmath>

#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

const Symbolic kPi = Symbolic::atom(Atom::Pi);
const Symbolic kLog2 = Symbolic::atom(Atom::Log2);
const Symbolic kLog3 = Symbolic::atom(Atom::Log3);
const Symbolic kHW = Symbolic::atom(Atom::HW);

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::BadParams, what);
}

void require_n(int n, int min = 1) {
  require(n >= min && n <= 64, "N out of range: " + std::to_string(n));
}

Symbolic q(long num, long den = 1) { return Symbolic(mpq_class(num, den)); }
Symbolic z(const mpz_class& v) { return Symbolic(mpq_class(v)); }

}  // namespace

Symbolic omega_ball(int r) {
  require(r >= 0 && r <= 256, "ball dimension out of range: " + std::to_string(r));
  const int k = r / 2;
  if (r % 2 == 0) return pow(kPi, k) * Symbolic(mpq_class(1, factorial(static_cast<unsigned>(k))));
  mpz_class double_fact = 1;
  for (int i = 1; i <= r; i += 2) double_fact *= i;
  mpz_class two_power;
  mpz_ui_pow_ui(two_power.get_mpz_t(), 2, static_cast<unsigned long>(k + 1));
  return pow(kPi, k) * Symbolic(mpq_class(two_power, double_fact));
}

Symbolic c1(int n) {
  require_n(n);
  return pow(q(3), n) * z(factorial(static_cast<unsigned>(n)));
}

Symbolic c2(int n) {
  require_n(n);
  return q(n, 2) * kHW + q(7 * n, 6) * kLog2;
}

Symbolic c3(int n) {
  require_n(n);
  return q(n) * (q(3) * kHW + q(6) * kLog2 + q(1, 2) * kLog3);
}

Symbolic c4(int n, int s) {
  require_n(n);
  require(s >= 0 && s <= n, "s must satisfy 0 <= s <= N");
  return c1(n) * pow(q(3, 2) * q(n + 1) * pow(q(12), n - 1), s);
}

Symbolic c5(int n, int m, int s) {
  require_n(n);
  require(m >= 1 && m <= n, "m must satisfy 1 <= m <= N");
  require(s >= 1 && s <= n, "s must satisfy 1 <= s <= N");
  const Symbolic lead = z(mpz_class(m) * m * m) * pow(z(factorial(static_cast<unsigned>(m))), 4) *
                        z(binomial(static_cast<unsigned>(n + m), static_cast<unsigned>(n)));
  const Symbolic frac = q(3L * s * n * n * (n - s + 1)) * pow(q(4), 3 * n - m + 1) *
                        pow(omega_ball(s) * omega_ball(n - s) * omega_ball(n), -2);
  return lead * frac * c4(n, s);
}

Symbolic c6(int n, int s) {
  require(s >= 1 && s <= n, "s must satisfy 1 <= s <= N");
  return q(3L * n * (n - s + 1)) * (q(2) * kLog2 + q(1, 6) * kLog3 + kHW) * c4(n, s);
}

Symbolic c10(int n) {
  require_n(n, 2);
  return c4(n, n - 1);
}

Symbolic c11(int n) {
  require_n(n, 2);
  return q(3, 2) * q(static_cast<long>(n) * n * (n * n - 1)) * pow(q(64), n) *
         pow(omega_ball(n) * omega_ball(n - 1), -2) * c10(n);
}

Symbolic c12(int n) {
  require_n(n, 2);
  return q(6L * n) * (kHW + q(2) * kLog2 + q(1, 6) * kLog3) * c10(n);
}

Symbolic c16(int n, int m) {
  require_n(n);
  require(m >= 1, "m must be positive");
  const mpz_class mf = factorial(static_cast<unsigned>(m));
  return z(mpz_class(m) * m * m) * pow(z(mf), 4) * q(n) * pow(q(4), -(m - 1));
}

Symbolic c17_squared(int n, int m) {
  require_n(n);
  require(m >= 1, "m must be positive");
  return z(binomial(static_cast<unsigned>(m + n), static_cast<unsigned>(n))) * pow(q(16), n) *
         pow(omega_ball(n), -2);
}

Symbolic big_c1(int n) {
  require_n(n);
  const unsigned un = static_cast<unsigned>(n);
  const Symbolic inner = pow(q(3), n * n + n + 1) * pow(q(2), 2 * n * n + 3 * n - 1) *
                         pow(q(n + 1), n + 1) * pow(omega_ball(n) * omega_ball(n - 1), -2);
  return pow(z(factorial(un)), n) * pow(q(n), 3 * n - 2) * pow(inner, n - 1);
}

Symbolic big_c2(int n) {
  return big_c1(n) * (pow(q(3), n) * q(1, 2) * kLog2 + q(12L * n) * kLog2 + q(n) * kLog3 +
                      q(6L * n) * kHW);
}

Symbolic big_c3(int n) {
  require_n(n);
  return q(7L * n * n, 6) * kLog2 + q(static_cast<long>(n) * n, 2) * kHW;
}

Symbolic d1() { return pow(q(2), 64) * pow(q(3), 40) * pow(kPi, -8); }

Symbolic d2() {
  return pow(q(2), 62) * pow(q(3), 41) * pow(kPi, -8) *
         (q(71) * kLog2 + q(4) * kLog3 + q(30) * kHW);
}

Symbolic d3() { return q(9, 2) * kHW + q(21, 2) * kLog2; }

const std::vector<std::pair<std::string, std::vector<std::string>>>& constant_catalog() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> catalog = {
      {"omega", {"r"}},    {"c1", {"N"}},          {"c2", {"N"}},      {"c3", {"N"}},
      {"c4", {"N", "s"}},  {"c5", {"N", "m", "s"}}, {"c6", {"N", "s"}}, {"c10", {"N"}},
      {"c11", {"N"}},      {"c12", {"N"}},          {"c16", {"N", "m"}}, {"c17", {"N", "m"}},
      {"C1", {"N"}},       {"C2", {"N"}},           {"C3", {"N"}},      {"D1", {}},
      {"D2", {}},          {"D3", {}},
  };
  return catalog;
}

ConstantValue constant(std::string_view name, const std::vector<int>& params, double hw) {
  const auto& catalog = constant_catalog();
  auto it = std::find_if(catalog.begin(), catalog.end(),
                         [&](const auto& e) { return e.first == name; });
  require(it != catalog.end(), "unknown constant: " + std::string(name));
  require(params.size() == it->second.size(),
          std::string(name) + " takes " + std::to_string(it->second.size()) + " parameter(s)");
  auto p = [&](std::size_t i) { return params[i]; };
  Symbolic v;
  bool root = false;
  if (name == "omega") v = omega_ball(p(0));
  else if (name == "c1") v = c1(p(0));
  else if (name == "c2") v = c2(p(0));
  else if (name == "c3") v = c3(p(0));
  else if (name == "c4") v = c4(p(0), p(1));
  else if (name == "c5") v = c5(p(0), p(1), p(2));
  else if (name == "c6") v = c6(p(0), p(1));
  else if (name == "c10") v = c10(p(0));
  else if (name == "c11") v = c11(p(0));
  else if (name == "c12") v = c12(p(0));
  else if (name == "c16") v = c16(p(0), p(1));
  else if (name == "c17") {
    require(p(1) <= p(0), "m must satisfy 1 <= m <= N");
    v = c17_squared(p(0), p(1));
    root = true;
  }
  else if (name == "C1") v = big_c1(p(0));
  else if (name == "C2") v = big_c2(p(0));
  else if (name == "C3") v = big_c3(p(0));
  else if (name == "D1") v = d1();
  else if (name == "D2") v = d2();
  else v = d3();
  ConstantValue out;
  out.name = std::string(name);
  out.params = params;
  const double value = v.evaluate(Bindings{hw, 0.0});
  out.value = root ? std::sqrt(value) : value;
  out.exact = root ? "(" + v.to_string() + ")^(1/2)" : v.to_string();
  return out;
}

}  // namespace ecbounds
