// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/habegger.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "ecbounds/constants.hpp"
#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

struct Candidate {
  double form_max = 0.0;
  mpz_class norm_sq;
  IntVector u;
  double norm = 0.0;
  std::vector<double> values;  // |L_j(u)|
};

bool primitive_and_canonical(const std::vector<long>& u) {
  long g = 0;
  for (long x : u) g = std::gcd(g, std::abs(x));
  if (g != 1) return false;
  for (long x : u) {
    if (x != 0) return x > 0;
  }
  return false;
}

// Primitive sign-canonical vectors of Z^n with |u| <= radius.
std::vector<std::vector<long>> primitive_vectors(int n, double radius) {
  const long r = static_cast<long>(std::floor(radius + 1e-9));
  const long r2 = static_cast<long>(std::floor(radius * radius + 1e-9));
  std::vector<std::vector<long>> out;
  std::vector<long> u(n, 0);
  std::function<void(int, long)> fill = [&](int i, long used) {
    if (i == n) {
      if (primitive_and_canonical(u)) out.push_back(u);
      return;
    }
    for (long x = -r; x <= r; ++x) {
      if (used + x * x > r2) continue;
      u[i] = x;
      fill(i + 1, used + x * x);
    }
    u[i] = 0;
  };
  fill(0, 0);
  return out;
}

}  // namespace

double LinearFormSystem::evaluate(int j, const IntVector& u) const {
  return scales[j] * std::abs(dot(coefficients[j], u).get_d());
}

double LinearFormSystem::norm(int j) const {
  return scales[j] * std::sqrt(norm_squared(coefficients[j]).get_d());
}

LinearFormSystem zero_forms(int n, int m) {
  LinearFormSystem f;
  f.n = n;
  f.coefficients.assign(m, IntVector(n, 0));
  f.scales.assign(m, 0.0);
  f.c16 = c16(n, m).evaluate();
  return f;
}

LinearFormSystem rank1_linear_forms(const IntegerMatrix& v, const std::vector<double>& heights) {
  const int n = v.rows();
  const int m = v.cols();
  if (n < 1 || m < 1 || static_cast<int>(heights.size()) != m) {
    fail(ErrorCode::BadParams, "need an N x m coefficient matrix and m generator heights");
  }
  LinearFormSystem f;
  f.n = n;
  for (int j = 0; j < m; ++j) {
    if (!(heights[j] >= 0)) fail(ErrorCode::BadParams, "generator heights must be nonnegative");
    for (int i = 0; i < n; ++i) f.a = std::max(f.a, v(i, j).get_d() * v(i, j).get_d() * heights[j]);
  }
  if (f.a == 0) fail(ErrorCode::AllTorsion, "every v_ij * h_hat(g_j) vanishes");
  for (int j = 0; j < m; ++j) {
    IntVector col(n);
    for (int i = 0; i < n; ++i) col[i] = v(i, j);
    f.coefficients.push_back(std::move(col));
    f.scales.push_back(std::sqrt(heights[j] / (n * f.a)));
  }
  f.c16 = c16(n, m).evaluate();
  return f;
}

HabeggerResult habegger_vectors(const LinearFormSystem& forms, double t, int s,
                                const HabeggerSearchOptions& options) {
  const int n = forms.n;
  const int m = forms.m();
  if (n < 1 || n > 4) fail(ErrorCode::BadParams, "enumeration supports 1 <= N <= 4");
  if (s < 1 || s > n) fail(ErrorCode::BadParams, "s must satisfy 1 <= s <= N");
  if (m < 1 || m > n) fail(ErrorCode::BadParams, "need 1 <= m <= N forms");
  if (!(t >= 1)) fail(ErrorCode::BadParams, "T must be >= 1");

  HabeggerResult result;
  result.c17 = std::sqrt(c17_squared(n, m).evaluate());
  result.target = result.c17 * std::pow(t, 1.0 - static_cast<double>(n) / (m * s));
  const double t_limit = t * (1 + options.relative_slack);
  const double q_limit = result.target * (1 + options.relative_slack);

  std::vector<Candidate> cands;
  for (const auto& raw : primitive_vectors(n, t)) {
    Candidate c;
    for (long x : raw) c.u.emplace_back(x);
    c.norm_sq = norm_squared(c.u);
    c.norm = std::sqrt(c.norm_sq.get_d());
    for (int j = 0; j < m; ++j) {
      c.values.push_back(forms.evaluate(j, c.u));
      c.form_max = std::max(c.form_max, c.values.back());
    }
    cands.push_back(std::move(c));
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.form_max != b.form_max) return a.form_max < b.form_max;
    if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
    return a.u < b.u;
  });

  std::vector<std::size_t> chosen;
  // Largest |L_j(u_k)| / |u_k| among chosen vectors; products only grow, so
  // any violation on a prefix is final.
  std::function<bool(std::size_t, double, double)> search = [&](std::size_t from, double prod,
                                                                 double ratio) -> bool {
    if (static_cast<int>(chosen.size()) == s) return true;
    for (std::size_t i = from; i < cands.size(); ++i) {
      if (++result.nodes > options.max_nodes) return false;
      const Candidate& c = cands[i];
      const double p = prod * c.norm;
      if (p > t_limit) continue;
      const double r = std::max(ratio, c.form_max / c.norm);
      if (p * r > q_limit) continue;
      std::vector<IntVector> rows;
      for (auto k : chosen) rows.push_back(cands[k].u);
      rows.push_back(c.u);
      if (IntegerMatrix(rows).rank() != static_cast<int>(rows.size())) continue;
      chosen.push_back(i);
      if (search(i + 1, p, r)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0, 1.0, 0.0)) {
    fail(ErrorCode::SearchExhausted,
         "no admissible tuple with T = " + format_real(t) + ", s = " + std::to_string(s));
  }

  result.norm_product = 1.0;
  for (auto k : chosen) {
    result.vectors.push_back(cands[k].u);
    result.norm_product *= cands[k].norm;
  }
  result.comparisons.push_back(
      compare_le("prod |u_k| <= T", result.norm_product, t, options.relative_slack));
  for (int j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      const Candidate& c = cands[chosen[k]];
      const double lhs = result.norm_product * c.values[j] / c.norm;
      result.comparisons.push_back(compare_le(
          "prod |u| * |L_" + std::to_string(j + 1) + "(u_" + std::to_string(k + 1) + ")| / |u_" +
              std::to_string(k + 1) + "| <= c17 T^(1 - N/(ms))",
          lhs, result.target, options.relative_slack));
    }
  }
  return result;
}

}  // namespace ecbounds
