// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ecbounds/error.hpp"
#include "ecbounds/lattice.hpp"

namespace ecbounds {
namespace {

IntegerMatrix m(const std::vector<std::vector<std::int64_t>>& rows) {
  return IntegerMatrix::from_rows(rows);
}

std::vector<mpz_class> sq(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

IntegerMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntegerMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = d(rng);
  return out;
}

IntegerMatrix random_full_rank(std::mt19937& rng, int rows, int cols, int bound) {
  for (;;) {
    IntegerMatrix b = random_matrix(rng, rows, cols, bound);
    if (b.rank() == rows) return b;
  }
}

// Exhaustive minima: every coefficient vector in a box large enough to hold all
// lattice vectors no longer than the longest basis row, then greedy selection.
std::vector<mpz_class> brute_minima(const IntegerMatrix& b) {
  const int r = b.rows(), n = b.cols();
  std::vector<std::vector<double>> g(r, std::vector<double>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g[i][j] = dot(b.row(i), b.row(j)).get_d();
  // Diagonal of G^{-1} by Gauss-Jordan.
  std::vector<std::vector<double>> inv(r, std::vector<double>(r, 0.0));
  for (int i = 0; i < r; ++i) inv[i][i] = 1;
  for (int c = 0; c < r; ++c) {
    int p = c;
    for (int i = c + 1; i < r; ++i)
      if (std::fabs(g[i][c]) > std::fabs(g[p][c])) p = i;
    std::swap(g[c], g[p]);
    std::swap(inv[c], inv[p]);
    const double d = g[c][c];
    for (int j = 0; j < r; ++j) {
      g[c][j] /= d;
      inv[c][j] /= d;
    }
    for (int i = 0; i < r; ++i) {
      if (i == c) continue;
      const double f = g[i][c];
      for (int j = 0; j < r; ++j) {
        g[i][j] -= f * g[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  double rho2 = 0;
  for (int i = 0; i < r; ++i) rho2 = std::max(rho2, norm_squared(b.row(i)).get_d());
  std::vector<int> box(r);
  long total = 1;
  for (int i = 0; i < r; ++i) {
    box[i] = static_cast<int>(std::floor(std::sqrt(rho2 * inv[i][i]) + 1e-9));
    total *= 2 * box[i] + 1;
  }
  EXPECT_LT(total, 5'000'000);
  std::vector<std::pair<mpz_class, IntVector>> vs;
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = -box[i];
  for (long t = 0; t < total; ++t) {
    IntVector v(n, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) v[j] += c[i] * b(i, j);
    const mpz_class nn = norm_squared(v);
    if (nn != 0 && nn <= rho2 + 0.5) vs.emplace_back(nn, v);
    for (int i = 0; i < r; ++i) {
      if (++c[i] <= box[i]) break;
      c[i] = -box[i];
    }
  }
  std::sort(vs.begin(), vs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<IntVector> chosen;
  std::vector<mpz_class> out;
  for (const auto& [nn, v] : vs) {
    std::vector<IntVector> trial = chosen;
    trial.push_back(v);
    if (IntegerMatrix(trial).rank() == static_cast<int>(trial.size())) {
      chosen = trial;
      out.push_back(nn);
      if (static_cast<int>(out.size()) == r) break;
    }
  }
  return out;
}

TEST(Lattice, MinimaExamples) {
  EXPECT_EQ(successive_minima(IntegerLattice(IntegerMatrix::identity(2))).norms_squared, sq({1, 1}));
  EXPECT_EQ(successive_minima(IntegerLattice(m({{2, 0}, {0, 3}}))).norms_squared, sq({4, 9}));
  const SuccessiveMinima s = successive_minima(IntegerLattice(m({{1, 1}, {1, -1}})));
  EXPECT_EQ(s.norms_squared, sq({2, 2}));
  EXPECT_NEAR(s.minima()[0], std::sqrt(2.0), 1e-15);
  // A skewed basis of Z^2 still has minima (1, 1).
  EXPECT_EQ(successive_minima(IntegerLattice(m({{1, 0}, {7, 1}}))).norms_squared, sq({1, 1}));
}

TEST(Lattice, MinimaMatchExhaustiveSearch) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 1 + trial % 3;
    const int n = r + trial % 2;
    const IntegerMatrix b = random_full_rank(rng, r, n, 6);
    const SuccessiveMinima s = successive_minima(IntegerLattice(b));
    EXPECT_EQ(s.norms_squared, brute_minima(b)) << b.to_string();
    ASSERT_EQ(static_cast<int>(s.vectors.size()), r);
    EXPECT_EQ(IntegerMatrix(s.vectors).rank(), r);
    for (int i = 0; i < r; ++i) EXPECT_EQ(norm_squared(s.vectors[i]), s.norms_squared[i]);
    EXPECT_TRUE(std::is_sorted(s.norms_squared.begin(), s.norms_squared.end()));
  }
}

TEST(Lattice, Determinants) {
  EXPECT_DOUBLE_EQ(det_lattice(IntegerLattice(IntegerMatrix::identity(2))), 1.0);
  EXPECT_DOUBLE_EQ(det_lattice(IntegerLattice(m({{1, 1}, {1, -1}}))), 2.0);
  EXPECT_DOUBLE_EQ(det_lattice(IntegerLattice(m({{3, 4}}))), 5.0);
  EXPECT_EQ(m({{2, 1}, {7, 4}}).determinant(), 1);
  EXPECT_EQ(bareiss_determinant({{0, 1}, {1, 0}}), -1);
  try {
    m({{1, 2, 3}}).determinant();
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquare);
  }
  try {
    IntegerLattice(m({{1, 2}, {2, 4}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParams);
  }
}

// Laplace expansion as the determinant oracle.
mpz_class laplace(const IntegerMatrix& a) {
  const int n = a.rows();
  if (n == 1) return a(0, 0);
  mpz_class total = 0;
  for (int j = 0; j < n; ++j) {
    IntegerMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = a(i, k);
    total += (j % 2 ? -1 : 1) * a(0, j) * laplace(minor);
  }
  return total;
}

TEST(Lattice, BareissMatchesLaplace) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    const IntegerMatrix a = random_matrix(rng, n, n, 20);
    EXPECT_EQ(a.determinant(), laplace(a));
  }
}

TEST(Lattice, OrthogonalExamples) {
  const OrthogonalLattice o = orthogonal_lattice(IntegerLattice(m({{1, 1, 1}})));
  EXPECT_EQ(o.lattice.rank(), 2);
  EXPECT_EQ(o.lattice.det_squared(), 3);
  EXPECT_TRUE(o.minima_basis);
  const OrthogonalLattice o2 = orthogonal_lattice(IntegerLattice(m({{1, 0}})));
  EXPECT_EQ(o2.lattice.basis(), m({{0, 1}}));
  const OrthogonalLattice o3 = orthogonal_lattice(IntegerLattice(m({{1, 0, 0}, {0, 1, 0}})));
  EXPECT_EQ(o3.lattice.basis(), m({{0, 0, 1}}));
  try {
    orthogonal_lattice(IntegerLattice(IntegerMatrix::identity(2)));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParams);
  }
}

TEST(Lattice, OrthogonalDeterminantProduct) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 4;
    const int r = 1 + trial % (n - 1);
    const IntegerMatrix b = random_full_rank(rng, r, n, 5);
    const IntegerLattice lat(b);
    const OrthogonalLattice o = orthogonal_lattice(lat);
    ASSERT_EQ(o.lattice.rank(), n - r);
    for (const auto& u : o.lattice.basis().row_vectors())
      for (const auto& v : b.row_vectors()) EXPECT_EQ(dot(u, v), 0);
    std::vector<IntVector> stacked = b.row_vectors();
    for (const auto& u : o.lattice.basis().row_vectors()) stacked.push_back(u);
    const mpz_class u = IntegerMatrix(stacked).determinant();
    EXPECT_EQ(u * u, lat.det_squared() * o.lattice.det_squared()) << b.to_string();
    if (o.minima_basis) {
      const SuccessiveMinima s = successive_minima(o.lattice);
      for (int i = 0; i < n - r; ++i)
        EXPECT_EQ(norm_squared(o.lattice.basis().row(i)), s.norms_squared[i]);
    }
  }
}

TEST(Lattice, AdjugateExamples) {
  EXPECT_EQ(adjugate(IntegerMatrix::identity(3)), IntegerMatrix::identity(3));
  EXPECT_EQ(adjugate(m({{2, 3}, {5, 7}})), m({{7, -3}, {-5, 2}}));
}

TEST(Lattice, AdjugateIdentityAndColumnBound) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const IntegerMatrix a = random_matrix(rng, n, n, 9);
    const IntegerMatrix adj = adjugate(a);
    IntegerMatrix scaled(n, n);
    for (int i = 0; i < n; ++i) scaled(i, i) = a.determinant();
    EXPECT_EQ(a * adj, scaled);
    EXPECT_EQ(adj * a, scaled);
    EXPECT_TRUE(adjugate_column_bound_holds(a, adj));
  }
}

TEST(Lattice, LllPreservesLatticeAndReduces) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const int r = 1 + trial % n;
    const IntegerMatrix b = random_full_rank(rng, r, n, 30);
    const IntegerMatrix red = lll_reduce(b);
    EXPECT_EQ(red.gram().determinant(), b.gram().determinant());
    // Every reduced row lies in the original lattice: appending it keeps the rank.
    for (const auto& row : red.row_vectors()) {
      std::vector<IntVector> s = b.row_vectors();
      s.push_back(row);
      EXPECT_EQ(IntegerMatrix(s).rank(), r);
    }
    // First reduced vector within 2^((r-1)/2) of the first minimum.
    const double l1 = successive_minima(IntegerLattice(b)).minima()[0];
    EXPECT_LE(std::sqrt(norm_squared(red.row(0)).get_d()), std::pow(2.0, (r - 1) / 2.0) * l1 + 1e-9);
  }
}

TEST(Minkowski, Examples) {
  const MinkowskiCertificate z1 = minkowski_certificate(IntegerLattice(m({{1}})));
  EXPECT_DOUBLE_EQ(z1.lower, 2);
  EXPECT_DOUBLE_EQ(z1.middle, 2);
  EXPECT_DOUBLE_EQ(z1.upper, 2);
  const MinkowskiCertificate z2 = minkowski_certificate(IntegerLattice(IntegerMatrix::identity(2)));
  EXPECT_DOUBLE_EQ(z2.lower, 2);
  EXPECT_NEAR(z2.middle, M_PI, 1e-15);
  EXPECT_DOUBLE_EQ(z2.upper, 4);
  const MinkowskiCertificate s = minkowski_certificate(IntegerLattice(m({{1, 1}, {1, -1}})));
  EXPECT_DOUBLE_EQ(s.lower, 4);
  EXPECT_NEAR(s.middle, 2 * M_PI, 1e-14);
  EXPECT_DOUBLE_EQ(s.upper, 8);
  EXPECT_EQ(s.middle_exact, "2 * pi");
}

TEST(Minkowski, RandomLattices) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 1 + trial % 4;
    const int n = r + trial % 2;
    const MinkowskiCertificate c = minkowski_certificate(IntegerLattice(random_full_rank(rng, r, n, 7)));
    EXPECT_TRUE(c.lower_holds);
    EXPECT_TRUE(c.upper_holds);
    EXPECT_LE(c.lower, c.middle * (1 + 1e-12));
    EXPECT_LE(c.middle, c.upper * (1 + 1e-12));
  }
}

TEST(Lattice, BudgetExceeded) {
  EnumerationBudget tiny;
  tiny.max_nodes = 1;
  try {
    successive_minima(IntegerLattice(m({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})), tiny);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Lattice, Printing) {
  EXPECT_EQ(m({{1, 2}, {3, 4}}).to_string(), "[[1,2],[3,4]]");
  EXPECT_EQ(m({{1, 2}, {3, 4}}).transpose(), m({{1, 3}, {2, 4}}));
}

}  // namespace
}  // namespace ecbounds
