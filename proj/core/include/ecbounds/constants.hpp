// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ecbounds/symbolic.hpp"

namespace ecbounds {

/// Volume of the euclidean unit ball in R^r; omega_0 = 1.
Symbolic omega_ball(int r);

// Explicit constants. Curve dependence enters only through the atom hW, so
// each is a single exact expression valid for every curve.
Symbolic c1(int n);                   // degree of the Segre image of (P_2)^N
Symbolic c2(int n);                   // h_hat <= h_2 / 3 + c2
Symbolic c3(int n);                   // h_2 / 3 <= h_hat + c3 / 3
Symbolic c4(int n, int s);            // 0 <= s <= N
Symbolic c5(int n, int m, int s);
Symbolic c6(int n, int s);
Symbolic c10(int n);                  // c4(N, N-1)
Symbolic c11(int n);                  // c5(N, 1, N-1)
Symbolic c12(int n);                  // c6(N, N-1)
Symbolic c16(int n, int m);
/// c17 is a square root; this is its exact square.
Symbolic c17_squared(int n, int m);
Symbolic big_c1(int n);
Symbolic big_c2(int n);
Symbolic big_c3(int n);
Symbolic d1();
Symbolic d2();
Symbolic d3();

/// A named constant evaluated for a given h_W.
struct ConstantValue {
  std::string name;
  std::vector<int> params;
  std::string exact;  // "(...)^(1/2)" for c17
  double value = 0.0;
};

/// Lookup by name ("omega", "c1".."c17", "C1".."C3", "D1".."D3"); BadParams on
/// unknown names, wrong arity or out-of-range parameters.
ConstantValue constant(std::string_view name, const std::vector<int>& params, double hw = 0.0);
/// Names accepted by constant(), with their parameter names.
const std::vector<std::pair<std::string, std::vector<std::string>>>& constant_catalog();

}  // namespace ecbounds
