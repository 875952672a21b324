// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "ecbounds/constants.hpp"
#include "ecbounds/curve.hpp"
#include "ecbounds/error.hpp"
#include "ecbounds/habegger.hpp"
#include "ecbounds/heights.hpp"

namespace ecbounds {
namespace {

double c17(int n, int m) {
  // binom(m+N, N)^(1/2) 4^N / omega_N, omega_N = pi^(N/2) / Gamma(N/2 + 1).
  const double binom = std::tgamma(m + n + 1.0) / (std::tgamma(n + 1.0) * std::tgamma(m + 1.0));
  const double omega = std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0 + 1);
  return std::sqrt(binom) * std::pow(4.0, n) / omega;
}

double norm(const IntVector& u) { return std::sqrt(norm_squared(u).get_d()); }

bool primitive(const IntVector& u) {
  mpz_class g = 0;
  for (const auto& x : u) g = gcd(g, x);
  return g == 1;
}

// Recomputes every inequality of the search from scratch.
void check_result(const LinearFormSystem& f, const HabeggerResult& r, double t, int s) {
  ASSERT_EQ(static_cast<int>(r.vectors.size()), s);
  EXPECT_EQ(IntegerMatrix(r.vectors).rank(), s);
  double prod = 1;
  for (const auto& u : r.vectors) {
    EXPECT_TRUE(primitive(u));
    prod *= norm(u);
  }
  EXPECT_NEAR(r.norm_product, prod, 1e-12 * prod);
  EXPECT_LE(prod, t * (1 + 1e-12));
  const double target = c17(f.n, f.m()) * std::pow(t, 1.0 - static_cast<double>(f.n) / (f.m() * s));
  EXPECT_NEAR(r.target, target, 1e-9 * target);
  EXPECT_NEAR(r.c17, c17(f.n, f.m()), 1e-9 * r.c17);
  for (int j = 0; j < f.m(); ++j) {
    for (const auto& u : r.vectors) {
      double lj = 0;
      for (int i = 0; i < f.n; ++i) lj += f.coefficients[j][i].get_d() * u[i].get_d();
      lj = std::fabs(lj * f.scales[j]);
      EXPECT_LE(prod * lj / norm(u), target * (1 + 1e-12));
    }
  }
  for (const Comparison& c : r.comparisons) EXPECT_TRUE(c.holds) << c.name;
  EXPECT_EQ(static_cast<int>(r.comparisons.size()), 1 + f.m() * s);
}

TEST(LinearForms, Examples) {
  const LinearFormSystem f = rank1_linear_forms(IntegerMatrix::from_rows({{1}, {2}}), {0.25});
  EXPECT_DOUBLE_EQ(f.a, 1.0);
  EXPECT_NEAR(f.scales[0], std::sqrt(1.0 / 8), 1e-15);
  EXPECT_EQ(f.coefficients[0], to_int_vector({1, 2}));
  EXPECT_NEAR(f.norm(0), std::sqrt(5.0 / 8), 1e-15);
  const LinearFormSystem g = rank1_linear_forms(IntegerMatrix::from_rows({{1}, {0}, {0}}), {0.7});
  EXPECT_NEAR(g.a, 0.7, 1e-15);
  EXPECT_NEAR(g.scales[0], std::sqrt(1.0 / 3), 1e-15);
  EXPECT_DOUBLE_EQ(g.c16, 3.0);
  EXPECT_NEAR(g.evaluate(0, to_int_vector({2, 5, 5})), 2 / std::sqrt(3.0), 1e-15);
}

TEST(LinearForms, NormsAtMostOne) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-6, 6);
  std::uniform_real_distribution<double> h(0.05, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4, m = 1 + trial % 3;
    IntegerMatrix v(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) v(i, j) = d(rng);
    v(0, 0) = 1;
    std::vector<double> hs(m);
    for (auto& x : hs) x = h(rng);
    const LinearFormSystem f = rank1_linear_forms(v, hs);
    for (int j = 0; j < m; ++j) EXPECT_LE(f.norm(j), 1 + 1e-12);
    const double c16 = std::pow(m, 3) * std::pow(std::tgamma(m + 1.0), 4) * n / std::pow(4.0, m - 1);
    EXPECT_NEAR(f.c16, c16, 1e-9 * c16);
  }
}

TEST(LinearForms, AllTorsion) {
  try {
    rank1_linear_forms(IntegerMatrix::from_rows({{0}, {0}}), {0.3});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllTorsion);
  }
}

TEST(HabeggerSearch, Examples) {
  LinearFormSystem f;
  f.n = 2;
  f.coefficients = {to_int_vector({1, 0})};
  f.scales = {1.0};
  const HabeggerResult r = habegger_vectors(f, 1, 1);
  ASSERT_EQ(r.vectors.size(), 1u);
  EXPECT_EQ(r.vectors[0], to_int_vector({0, 1}));
  EXPECT_EQ(r.comparisons.back().lhs, 0.0);
  EXPECT_NEAR(r.comparisons.back().rhs, c17(2, 1), 1e-9);
  check_result(f, r, 1, 1);

  const LinearFormSystem z = zero_forms(3, 1);
  const HabeggerResult rz = habegger_vectors(z, 9, 1);
  EXPECT_EQ(norm_squared(rz.vectors[0]), 1);

  const LinearFormSystem f2 = rank1_linear_forms(IntegerMatrix::from_rows({{1}, {2}}), {0.25});
  const HabeggerResult r2 = habegger_vectors(f2, 4, 2);
  check_result(f2, r2, 4, 2);
}

TEST(HabeggerSearch, RandomRankOneConfigurations) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> d(-7, 7);
  const double ts[] = {1, 4, 16};
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    IntegerMatrix v(n, 1);
    do {
      for (int i = 0; i < n; ++i) v(i, 0) = d(rng);
    } while (v.rank() == 0);
    const LinearFormSystem f = rank1_linear_forms(v, {0.1257});
    const int s = 1 + trial % n;
    const double t = ts[trial % 3];
    check_result(f, habegger_vectors(f, t, s), t, s);
  }
}

TEST(HabeggerSearch, BadParams) {
  const LinearFormSystem z = zero_forms(2, 1);
  for (auto [t, s] : {std::pair{0.5, 1}, std::pair{2.0, 3}, std::pair{2.0, 0}}) {
    try {
      habegger_vectors(z, t, s);
      ADD_FAILURE() << t << " " << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadParams);
    }
  }
}

// h_hat(t_1 P_1 + ... + t_N P_N) <= c16 max_j |L_j(t)|^2 h_hat(P) for P_i = [v_i] g.
TEST(LinearForms, HeightInequalityOnE0) {
  const Point g = e0_generator();
  const double tol = 1e-3;
  const HeightInterval hg = neron_tate(g, tol);
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dv(-3, 3), dt(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 2;
    IntegerMatrix v(n, 1);
    do {
      for (int i = 0; i < n; ++i) v(i, 0) = dv(rng);
    } while (v.rank() == 0);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back(scalar_mul(v(i, 0), g));
    const LinearFormSystem f = rank1_linear_forms(v, {hg.mid()});
    IntVector t(n);
    Point sum = Point::identity(Curve::e0());
    for (int i = 0; i < n; ++i) {
      t[i] = dt(rng);
      sum = add(sum, scalar_mul(t[i].get_si(), pts[i]));
    }
    const HeightInterval lhs = neron_tate(sum, tol);
    const HeightInterval hp = canonical_height_product(pts, tol);
    const double l = f.evaluate(0, t);
    const double rhs = f.c16 * l * l * hp.hi;
    EXPECT_LE(lhs.lo, rhs + lhs.width() + hp.width() * f.c16 * l * l + 1e-12) << trial;
  }
}

}  // namespace
}  // namespace ecbounds
