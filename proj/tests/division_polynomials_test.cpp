// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <thread>

#include "ecbounds/curve.hpp"
#include "ecbounds/division_polynomials.hpp"
#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

// psi_m at a single point (x, y) of y^2 = x^3 + Ax + B, by the textbook
// recursion carried out on numbers with y kept explicit.
class PsiAtPoint {
 public:
  PsiAtPoint(mpq_class a, mpq_class b, mpq_class x, mpq_class y)
      : a_(std::move(a)), b_(std::move(b)), x_(std::move(x)), y_(std::move(y)) {}

  mpq_class psi(int m) {
    if (m < 0) return -psi(-m);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    const mpq_class& a = a_;
    const mpq_class& b = b_;
    const mpq_class& x = x_;
    const mpq_class& y = y_;
    mpq_class v;
    if (m == 0) v = 0;
    else if (m == 1) v = 1;
    else if (m == 2) v = 2 * y;
    else if (m == 3) v = 3 * x * x * x * x + 6 * a * x * x + 12 * b * x - a * a;
    else if (m == 4) {
      v = 4 * y *
          (x * x * x * x * x * x + 5 * a * x * x * x * x + 20 * b * x * x * x -
           5 * a * a * x * x - 4 * a * b * x - 8 * b * b - a * a * a);
    } else if (m % 2 == 1) {
      const int k = m / 2;
      const mpq_class pk = psi(k), pk1 = psi(k + 1);
      v = psi(k + 2) * pk * pk * pk - psi(k - 1) * pk1 * pk1 * pk1;
    } else {
      const int k = m / 2;
      const mpq_class pkm1 = psi(k - 1), pk1 = psi(k + 1);
      v = psi(k) / (2 * y) * (psi(k + 2) * pkm1 * pkm1 - psi(k - 2) * pk1 * pk1);
    }
    memo_[m] = v;
    return v;
  }

  mpq_class phi(int m) { return x_ * psi(m) * psi(m) - psi(m + 1) * psi(m - 1); }

  mpq_class omega(int m) {
    const mpq_class l = psi(m - 1), h = psi(m + 1);
    return (psi(m + 2) * l * l - psi(m - 2) * h * h) / (4 * y_);
  }

 private:
  mpq_class a_, b_, x_, y_;
  std::map<int, mpq_class> memo_;
};

struct Sample {
  mpz_class a, b;
  mpq_class x, y;
};

// Random (A, x, y) with B chosen so that (x, y) lies on the curve.
std::vector<Sample> samples(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < count) {
    const mpz_class a = d(rng);
    const mpq_class x = d(rng), y = d(rng);
    if (y == 0) continue;
    const mpq_class bq = y * y - x * x * x - a * x;
    const mpz_class b = bq.get_num();
    if (4 * a * a * a + 27 * b * b == 0) continue;
    out.push_back({a, b, x, y});
  }
  return out;
}

template <class P>
mpq_class at(const P& poly, const Sample& s);

template <>
mpq_class at(const ZPoly& poly, const Sample& s) { return poly.evaluate(s.x); }

template <>
mpq_class at(const ABXPoly& poly, const Sample& s) {
  return poly.specialize(s.a, s.b).evaluate(s.x);
}

TEST(DivisionPolynomials, GenericAgreesWithPointRecursion) {
  const GenericDivisionPolynomials sys = make_generic_division_polynomials();
  for (const Sample& s : samples(6, 11)) {
    PsiAtPoint oracle(s.a, s.b, s.x, s.y);
    for (int m = 1; m <= 12; ++m) {
      const DivisionPoly<ABXPoly> p = sys.psi(m);
      const mpq_class body = at(p.body, s);
      const mpq_class expected = oracle.psi(m);
      if (m % 2 == 1) {
        EXPECT_EQ(p.parity, Parity::Odd);
        EXPECT_EQ(body, expected) << m;
      } else {
        EXPECT_EQ(p.parity, Parity::Even);
        EXPECT_EQ(2 * s.y * body, expected) << m;
      }
      EXPECT_EQ(at(sys.psi_squared(m), s), expected * expected) << m;
      const YPoly<ABXPoly> cube = sys.psi_cubed(m);
      EXPECT_EQ(at(cube.c, s) + s.y * at(cube.y_part, s), expected * expected * expected) << m;
      EXPECT_EQ(at(sys.phi(m), s), oracle.phi(m)) << m;
      const YPoly<ABXPoly> om = sys.omega(m);
      EXPECT_EQ(at(om.c, s) + s.y * at(om.y_part, s), oracle.omega(m)) << m;
    }
  }
}

TEST(DivisionPolynomials, CurveSystemAgreesWithPointRecursion) {
  for (const Sample& s : samples(6, 23)) {
    const CurveDivisionPolynomials sys = make_division_polynomials(Curve::create(s.a, s.b));
    PsiAtPoint oracle(s.a, s.b, s.x, s.y);
    for (int m = 1; m <= 25; ++m) {
      EXPECT_EQ(at(sys.psi_squared(m), s), oracle.psi(m) * oracle.psi(m)) << m;
      EXPECT_EQ(at(sys.phi(m), s), oracle.phi(m)) << m;
      const YPoly<ZPoly> om = sys.omega(m);
      EXPECT_EQ(at(om.c, s) + s.y * at(om.y_part, s), oracle.omega(m)) << m;
    }
  }
}

ABXPoly a_() { return ABXPoly::var_a(); }
ABXPoly b_() { return ABXPoly::var_b(); }
ABXPoly x_() { return ABXPoly::var_x(); }
ABXPoly k(long c) { return ABXPoly::constant(c); }

TEST(DivisionPolynomials, SmallIndices) {
  const GenericDivisionPolynomials sys = make_generic_division_polynomials();
  const ABXPoly x = x_(), a = a_(), b = b_();
  const DivisionPoly<ABXPoly> p2 = sys.psi(2);
  EXPECT_EQ(p2.parity, Parity::Even);
  EXPECT_EQ(p2.body, k(1));
  EXPECT_EQ(sys.psi(3).body, k(3) * x * x * x * x + k(6) * a * x * x + k(12) * b * x - a * a);
  EXPECT_EQ(sys.phi(2), x * x * x * x - k(2) * a * x * x - k(8) * b * x + a * a);
  EXPECT_EQ(sys.phi(1), x);
  EXPECT_EQ(sys.psi_squared(1), k(1));
}

TEST(DivisionPolynomials, FifthByExpansion) {
  const GenericDivisionPolynomials sys = make_generic_division_polynomials();
  const ABXPoly x = x_(), a = a_(), b = b_();
  const ABXPoly f = x * x * x + a * x + b;
  const ABXPoly psi3 = k(3) * x * x * x * x + k(6) * a * x * x + k(12) * b * x - a * a;
  const ABXPoly psi4_over_4y = x * x * x * x * x * x + k(5) * a * x * x * x * x +
                               k(20) * b * x * x * x - k(5) * a * a * x * x -
                               k(4) * a * b * x - k(8) * b * b - a * a * a;
  // psi_4 psi_2^3 = (4y b_4)(8 y^3) = 32 F^2 b_4 once y^2 = F.
  const ABXPoly expected = k(32) * f * f * psi4_over_4y - psi3 * psi3 * psi3;
  EXPECT_EQ(sys.psi(5).body, expected);
}

TEST(DivisionPolynomials, DegreeExamples) {
  const GenericDivisionPolynomials sys = make_generic_division_polynomials();
  DegreeReport r = degree_report(sys, 2);
  EXPECT_EQ(r.d_phi, 4);
  EXPECT_EQ(r.d_psi_sq, 3);
  r = degree_report(sys, 1);
  EXPECT_EQ(r.d_phi, 1);
  EXPECT_EQ(r.d_psi_sq, 0);
  r = degree_report(sys, 7);
  EXPECT_EQ(r.d_phi, 49);
  EXPECT_EQ(r.d_psi_sq, 48);
  EXPECT_EQ(r.d_psi, 24);
}

TEST(DivisionPolynomials, DegreeLawsUpToSixty) {
  const CurveDivisionPolynomials sys = make_division_polynomials(Curve::e0());
  for (int m = 1; m <= 60; ++m) {
    const DegreeReport r = degree_report(sys, m);
    EXPECT_EQ(r.d_phi, m * m);
    EXPECT_EQ(r.d_psi_sq, m * m - 1);
    // y counts as one degree, so psi_m = 2y * body has degree deg(body) + 1 for even m.
    EXPECT_EQ(r.d_psi, m % 2 == 1 ? (m * m - 1) / 2 : (m * m - 4) / 2 + 1);
    EXPECT_LE(2 * r.d_psi, m * m + 1);
    EXPECT_LE(2 * r.d_psi_cubed, 3 * m * m - 1);
    EXPECT_LE(2 * r.d_omega, 3 * (m * m + 1));
    EXPECT_TRUE(r.phi_monic);
    EXPECT_TRUE(r.psi_sq_leading_m2);
  }
}

TEST(DivisionPolynomials, MultiplicationMatchesDoubleAndAdd) {
  const CurveDivisionPolynomials sys = make_division_polynomials(Curve::e0());
  const Point g = e0_generator();
  EXPECT_EQ(mul_via_division_polys(sys, 1, g), g);
  EXPECT_EQ(mul_via_division_polys(sys, 2, g), Point::affine(Curve::e0(), 2, -3));
  for (int kk = 1; kk <= 5; ++kk) {
    const Point p = scalar_mul(kk, g);
    for (int m = 1; m <= 20; ++m) {
      EXPECT_EQ(mul_via_division_polys(sys, m, p), scalar_mul(m * kk, g)) << m << " " << kk;
    }
  }
}

TEST(DivisionPolynomials, TorsionDenominator) {
  const Curve c = Curve::create(0, 1);
  const CurveDivisionPolynomials sys = make_division_polynomials(c);
  const Point p = Point::affine(c, 2, 3);
  EXPECT_EQ(mul_via_division_polys(sys, 5, p), scalar_mul(5, p));
  try {
    mul_via_division_polys(sys, 6, p);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TorsionDenominator);
  }
}

TEST(DivisionPolynomials, ConcurrentAccessIsConsistent) {
  const CurveDivisionPolynomials sys = make_division_polynomials(Curve::e0());
  const CurveDivisionPolynomials ref = make_division_polynomials(Curve::e0());
  std::vector<std::thread> workers;
  std::vector<ZPoly> got(8);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] { got[t] = sys.phi(20 + t); });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) EXPECT_EQ(got[t], ref.phi(20 + t));
}

TEST(Polynomial, KroneckerMatchesSchoolbook) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-1'000'000, 1'000'000);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<mpz_class> ca(1 + trial % 17), cb(1 + trial % 11);
    for (auto& c : ca) c = mpz_class(d(rng)) * d(rng) * d(rng);
    for (auto& c : cb) c = d(rng);
    const ZPoly a(ca), b(cb);
    EXPECT_EQ(multiply_kronecker(a, b), multiply_schoolbook(a, b));
  }
}

}  // namespace
}  // namespace ecbounds
