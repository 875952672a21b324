// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "ecbounds/chow.hpp"
#include "ecbounds/cn_family.hpp"
#include "ecbounds/curve.hpp"
#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

TEST(CnFamily, Degree) {
  EXPECT_EQ(cn_degree(1), 18);
  EXPECT_EQ(cn_degree(2), 27);
  EXPECT_EQ(cn_degree(10), 99);
  for (int n = 1; n <= 100; ++n) EXPECT_EQ(cn_degree(n), 9 * (n + 1));
}

TEST(CnFamily, Genus) {
  const CnGenus g1 = cn_genus(1);
  EXPECT_EQ(g1.genus, 6);
  EXPECT_EQ(g1.ramification_sum, 22);
  EXPECT_EQ(cn_genus(2).genus, 10);
  for (int n = 1; n <= 100; ++n) {
    const CnGenus g = cn_genus(n);
    EXPECT_EQ(g.genus, 4 * n + 2);
    EXPECT_EQ(g.map_degree, 6 * n);
    EXPECT_TRUE(g.balanced);
    long sum = 0;
    for (const BranchFiber& f : g.fibers) {
      EXPECT_EQ(f.total_degree(), g.map_degree) << f.label;
      sum += f.contribution();
    }
    EXPECT_EQ(sum, g.ramification_sum);
    // Riemann-Hurwitz over P_1.
    EXPECT_EQ(2 * g.genus - 2, -2 * g.map_degree + g.ramification_sum);
  }
}

TEST(CnFamily, EssentialMinimum) {
  const EssentialMinimumChain c = cn_essential_min_chain(1);
  EXPECT_EQ(c.total, Symbolic(mpq_class(7, 2)) * Symbolic::atom(Atom::Log3));
  for (int n = 1; n <= 50; ++n) {
    const double want = std::log(3.0) * (4 * n + 3) / (2.0 * n);
    EXPECT_NEAR(cn_essential_min_bound(n), want, 1e-13 * want);
    EXPECT_NEAR(cn_curve_height_bound(n).evaluate(), 9.0 * (n + 1) * std::log(3.0) * (4 * n + 3) / n,
                1e-10);
  }
  EXPECT_NEAR(cn_essential_min_bound(1000000), 2 * std::log(3.0), 1e-5);
}

TEST(CnFamily, PointBoundAgainstHeadline) {
  const BoundCertificate b1 = cn_point_height_bound(1);
  EXPECT_LE(b1.value, 8.253e38 * 8);
  EXPECT_GE(b1.value / (8.253e38 * 8), 0.99);
  EXPECT_TRUE(b1.all_hold());
  for (int n : {2, 5, 17, 50, 100}) {
    const BoundCertificate b = cn_point_height_bound(n);
    EXPECT_LE(b.value, cn_headline_point_bound(n)) << n;
    EXPECT_TRUE(b.all_hold()) << n;
  }
}

TEST(CnFamily, CoefficientBounds) {
  double best = 0;
  for (int n = 1; n <= 100; ++n) {
    const CnCoefficientBounds c = cn_coeff_bounds(n);
    const double ratio = c.a_max / (7.037e19 * (n + 1));
    EXPECT_LE(ratio, 1.001) << n;
    EXPECT_LE(c.a_max_computed_bound, c.a_max * (1 + 1e-12)) << n;
    EXPECT_EQ(c.b_quadratic, mpq_class(3 * n) / 2);
    best = std::max(best, ratio);
  }
  EXPECT_GE(best, 0.99);
  const CnCoefficientBounds c1 = cn_coeff_bounds(1);
  EXPECT_EQ(c1.b_constant, Symbolic(14) * Symbolic::atom(Atom::Log2) + Symbolic(10));
  EXPECT_NEAR(c1.b_bound(1), std::sqrt(1.5 + 14 * std::log(2.0) + 10), 1e-13);
  // (2n/3 + 1) a^2 / 4 <= headline + 2 log 2 + 5n/3 at a = a_max.
  const double lhs = (2.0 / 3 + 1) * c1.a_max * c1.a_max / 4;
  EXPECT_NEAR(lhs / (cn_headline_point_bound(1) + 2 * std::log(2.0) + 5.0 / 3), 1.0, 1e-12);
}

TEST(CnFamily, Membership) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(cn_membership(1, 1, n));
  EXPECT_FALSE(cn_membership(2, 1, 1));
  EXPECT_TRUE(cn_membership(-1, 1, 1));
  EXPECT_FALSE(cn_membership(0, 1, 1));
  EXPECT_FALSE(cn_membership(1, 0, 1));
}

TEST(CnFamily, SearchMatchesBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    const auto fast = cn_search(n, 15);
    EXPECT_EQ(fast, cn_brute_force(n, 15)) << n;
    EXPECT_EQ(cn_search(n, 15, 4), fast);
    for (const CnSolution& s : fast) EXPECT_TRUE(cn_membership(s.a, s.b, n));
  }
  const auto n1 = cn_search(1, 5);
  EXPECT_NE(std::find_if(n1.begin(), n1.end(), [](auto& s) { return s.a == 1 && s.b == 1; }), n1.end());
  EXPECT_NE(std::find_if(n1.begin(), n1.end(), [](auto& s) { return s.a == -1 && s.b == 1; }), n1.end());
  const auto n2 = cn_search(2, 5);
  EXPECT_NE(std::find_if(n2.begin(), n2.end(), [](auto& s) { return s.a == 1 && s.b == 1; }), n2.end());
}

TEST(CnFamily, Report) {
  const CnReport r = cn_report(1);
  EXPECT_EQ(r.degree, 18);
  EXPECT_EQ(r.genus.genus, 6);
  EXPECT_LE(r.point_bound.value, 6.6024e39);
  EXPECT_THROW(cn_report(0), Error);
}

}  // namespace
}  // namespace ecbounds
