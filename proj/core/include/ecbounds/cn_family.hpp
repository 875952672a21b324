// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ecbounds/certificate.hpp"
#include "ecbounds/curve.hpp"
#include "ecbounds/heights.hpp"
#include "ecbounds/symbolic.hpp"

// The curves C_n in E0^2 cut out by x_1^n = y_2, E0: y^2 = x^3 + x - 1.

namespace ecbounds {

/// 9(n+1), from the Chow product (n l + m)(3 l)(3 m)(l + m).
mpz_class cn_degree(int n);

/// One branch point of y_2 : C_n -> P_1.
struct BranchFiber {
  std::string label;   // "beta_1", "0", "alpha_1^n", "infinity", ...
  long ramified = 0;   // preimages with index > 1
  long index = 1;      // their ramification index
  long unramified = 0;
  long contribution() const { return ramified * (index - 1); }
  long total_degree() const { return ramified * index + unramified; }
};

struct CnGenus {
  int genus = 0;
  long map_degree = 0;  // 6n
  std::vector<BranchFiber> fibers;
  long ramification_sum = 0;
  /// 2 - 2g == 2 map_degree - ramification_sum and every fiber has degree 6n.
  bool balanced = false;
};
CnGenus cn_genus(int n);

/// Heights along the chain bounding the essential minimum through the points
/// ((x_1, y_1), (zeta, y_2)) with zeta a root of unity.
struct EssentialMinimumChain {
  Symbolic h_zeta, h_y2, h_x1, h_y1;
  Symbolic h_x1y1, h_zeta_y2;
  Symbolic h2_x1y1, h2_zeta_y2;
  Symbolic total;  // log 3 (4n + 3) / (2n)
};
EssentialMinimumChain cn_essential_min_chain(int n);
double cn_essential_min_bound(int n);
/// h(C_n) <= 2 deg(C_n) mu(C_n) = 9 (n+1) log 3 (4n+3) / n.
Symbolic cn_curve_height_bound(int n);

/// The stated headline 8.253e38 (n+1)^3.
double cn_headline_point_bound(int n);
/// The E^2 rank-one bound at h(C_n), deg(C_n), compared with the headline.
BoundCertificate cn_point_height_bound(int n);

struct CnCoefficientBounds {
  int n = 0;
  /// From h_hat(P) <= headline and h_hat(g) >= 1/4.
  double a_max = 0.0;
  /// Same, with the computed point bound in place of the headline.
  double a_max_computed_bound = 0.0;
  /// Same as a_max_computed_bound with the certified lower end of h_hat(g)
  /// in place of 1/4.
  double a_max_certified_generator = 0.0;
  mpq_class b_quadratic;  // 3n/2
  Symbolic b_constant;    // 14 log 2 + 10
  /// |b| <= sqrt(b_quadratic a^2 + b_constant).
  double b_bound(double a) const;
};
CnCoefficientBounds cn_coeff_bounds(int n);

/// x([a]g)^n == y([b]g); false when a = 0 or b = 0.
bool cn_membership(std::int64_t a, std::int64_t b, int n);

struct CnSolution {
  std::int64_t a = 0;
  std::int64_t b = 0;
  mpq_class x_a;  // x([a]g)
  mpq_class y_b;  // y([b]g) = x_a^n
  friend bool operator==(const CnSolution&, const CnSolution&) = default;
};

/// All (a, b) with 0 < |a|, |b| <= radius and ([a]g, [b]g) on C_n, sorted.
/// For each a the matching b is found by solving for x on E0 given y = x([a]g)^n.
std::vector<CnSolution> cn_search(int n, std::int64_t radius, unsigned threads = 1);
/// Reference double loop over the same box.
std::vector<CnSolution> cn_brute_force(int n, std::int64_t radius);

/// h_hat(g) for the generator (1, 1) at tolerance 1e-3.
HeightInterval generator_height_check();

struct CnReport {
  int n = 0;
  mpz_class degree;
  CnGenus genus;
  EssentialMinimumChain essential_min;
  double essential_min_upper = 0.0;
  Symbolic curve_height_upper;
  BoundCertificate point_bound;
  CnCoefficientBounds coefficients;
};
CnReport cn_report(int n);

}  // namespace ecbounds
