// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "ecbounds/certificate.hpp"
#include "ecbounds/lattice.hpp"

namespace ecbounds {

/// Forms L_j(X) = scale_j * (coefficients_j . X) in N variables, |L_j| <= 1.
struct LinearFormSystem {
  int n = 0;
  std::vector<IntVector> coefficients;  // one integer vector per form
  std::vector<double> scales;
  double a = 0.0;                       // max_ij v_ij^2 h_hat(g_j)
  double c16 = 0.0;

  int m() const { return static_cast<int>(coefficients.size()); }
  /// |L_j(u)|.
  double evaluate(int j, const IntVector& u) const;
  /// Euclidean norm of the coefficient vector of L_j.
  double norm(int j) const;
};

/// Zero forms in N variables (the all-torsion situation).
LinearFormSystem zero_forms(int n, int m);

/// For v (N x m, entry (i, j) = v_ij) and canonical heights of the generators:
/// A = max v_ij^2 h_hat(g_j), L_j = sqrt(h_hat(g_j) / (N A)) sum_i v_ij X_i.
/// AllTorsion when A = 0.
LinearFormSystem rank1_linear_forms(const IntegerMatrix& v, const std::vector<double>& heights);

struct HabeggerSearchOptions {
  std::uint64_t max_nodes = 5'000'000;
  double relative_slack = 1e-12;
};

struct HabeggerResult {
  std::vector<IntVector> vectors;
  double norm_product = 0.0;
  double target = 0.0;  // c17(N, m) T^(1 - N/(ms))
  double c17 = 0.0;
  /// Norm product against T, then one entry per (j, k).
  std::vector<Comparison> comparisons;
  std::uint64_t nodes = 0;
};

/// Linearly independent primitive u_1..u_s with prod |u_k| <= T and
/// prod |u| * |L_j(u_k)| / |u_k| <= c17(N, m) T^(1 - N/(ms)) for all j, k.
/// Candidates are ordered by (max_j |L_j(u)|, |u|^2, lexicographic).
/// SearchExhausted if no tuple is found.
HabeggerResult habegger_vectors(const LinearFormSystem& forms, double t, int s,
                                const HabeggerSearchOptions& options = {});

}  // namespace ecbounds
