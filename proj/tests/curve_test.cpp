// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "ecbounds/curve.hpp"
#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::BadParams;
}

TEST(Curve, DiscriminantAndJ) {
  const Curve e0 = Curve::create(1, -1);
  EXPECT_EQ(e0.discriminant(), -496);
  EXPECT_EQ(e0.j_invariant(), mpq_class(6912, 31));
  const Curve c = Curve::create(-1, 0);
  EXPECT_EQ(c.discriminant(), 64);
  EXPECT_EQ(c.j_invariant(), 1728);
  EXPECT_EQ(code_of([] { Curve::create(0, 0); }), ErrorCode::SingularCurve);
  EXPECT_EQ(code_of([] { Curve::create(-3, 2); }), ErrorCode::SingularCurve);
}

TEST(Curve, ParseRoundTrip) {
  const Curve c = parse_curve("1,-1");
  EXPECT_EQ(c, Curve::e0());
  EXPECT_EQ(c.to_string(), "1,-1");
  EXPECT_EQ(code_of([] { parse_curve("1;-1"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_curve("x,1"); }), ErrorCode::ParseError);
  const Point p = parse_point(c, "2,-3");
  EXPECT_EQ(parse_point(c, p.to_string()), p);
  EXPECT_TRUE(parse_point(c, "O").is_identity());
  EXPECT_EQ(code_of([&] { parse_point(c, "2,2"); }), ErrorCode::NotOnCurve);
}

TEST(Curve, GroupLawExamples) {
  const Curve e0 = Curve::e0();
  const Point g = e0_generator();
  const Point o = Point::identity(e0);
  const Point two_g = add(g, g);
  EXPECT_EQ(two_g, Point::affine(e0, 2, -3));
  EXPECT_EQ(dbl(g), two_g);
  EXPECT_EQ(add(g, o), g);
  EXPECT_EQ(add(o, g), g);
  EXPECT_TRUE(add(g, neg(g)).is_identity());
  EXPECT_EQ(neg(g), Point::affine(e0, 1, -1));
  EXPECT_TRUE(neg(o).is_identity());
  EXPECT_EQ(neg(two_g), Point::affine(e0, 2, 3));
  EXPECT_TRUE(scalar_mul(0, g).is_identity());
  EXPECT_EQ(scalar_mul(1, g), g);
  EXPECT_EQ(scalar_mul(3, g), add(add(g, g), g));
  EXPECT_EQ(scalar_mul(-3, g), neg(scalar_mul(3, g)));
  EXPECT_EQ(scalar_mul(mpz_class(7), g), scalar_mul(7, g));
}

TEST(Curve, CurveMismatch) {
  const Curve other = Curve::create(-1, 1);
  const Point q = Point::affine(other, 1, 1);
  EXPECT_EQ(code_of([&] { add(e0_generator(), q); }), ErrorCode::CurveMismatch);
}

// Tangent-chord formulas written out independently.
std::pair<mpq_class, mpq_class> chord(const mpq_class& x1, const mpq_class& y1,
                                      const mpq_class& x2, const mpq_class& y2,
                                      const mpq_class& a) {
  mpq_class lambda = x1 == x2 ? mpq_class((3 * x1 * x1 + a) / (2 * y1))
                              : mpq_class((y2 - y1) / (x2 - x1));
  mpq_class x3 = lambda * lambda - x1 - x2;
  mpq_class y3 = lambda * (x1 - x3) - y1;
  return {x3, y3};
}

TEST(Curve, MultiplesAgreeWithChordOracle) {
  const Point g = e0_generator();
  mpq_class x = 1, y = 1;
  for (int k = 2; k <= 25; ++k) {
    std::tie(x, y) = chord(x, y, 1, 1, 1);
    const Point p = scalar_mul(k, g);
    ASSERT_FALSE(p.is_identity());
    EXPECT_EQ(p.x(), x) << k;
    EXPECT_EQ(p.y(), y) << k;
  }
}

TEST(Curve, GroupLawProperties) {
  const Point g = e0_generator();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-12, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const int a = d(rng), b = d(rng), c = d(rng);
    const Point p = scalar_mul(a, g), q = scalar_mul(b, g), r = scalar_mul(c, g);
    EXPECT_EQ(add(p, q), add(q, p));
    EXPECT_EQ(add(add(p, q), r), add(p, add(q, r)));
    EXPECT_EQ(add(p, q), scalar_mul(a + b, g));
    EXPECT_EQ(sub(p, q), scalar_mul(a - b, g));
    EXPECT_EQ(scalar_mul(b, p), scalar_mul(a * b, g));
    if (!p.is_identity()) EXPECT_TRUE(p.curve().contains(p.x(), p.y()));
  }
}

TEST(Curve, TorsionPoints) {
  // y^2 = x^3 + 1 has the cyclic 6-torsion group generated by (2, 3).
  const Curve c = Curve::create(0, 1);
  const Point p = Point::affine(c, 2, 3);
  EXPECT_TRUE(scalar_mul(6, p).is_identity());
  for (int k = 1; k < 6; ++k) EXPECT_FALSE(scalar_mul(k, p).is_identity());
  EXPECT_EQ(scalar_mul(3, p), Point::affine(c, -1, 0));
}

}  // namespace
}  // namespace ecbounds
