// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace ecbounds {

/// Short Weierstrass curve y^2 = x^3 + A x + B over Q with integer A, B.
/// Immutable; copies share the same underlying data.
class Curve {
 public:
  /// Throws SingularCurve when the discriminant vanishes.
  static Curve create(const mpz_class& a, const mpz_class& b);
  /// y^2 = x^3 + x - 1, the rank-one curve with generator (1, 1).
  static Curve e0();

  const mpz_class& a() const { return data_->a; }
  const mpz_class& b() const { return data_->b; }
  /// -16 (4A^3 + 27B^2)
  const mpz_class& discriminant() const { return data_->delta; }
  /// -1728 (4A)^3 / discriminant
  const mpq_class& j_invariant() const { return data_->j; }

  /// x^3 + A x + B evaluated exactly.
  mpq_class rhs(const mpq_class& x) const;
  bool contains(const mpq_class& x, const mpq_class& y) const;

  std::string to_string() const;  // "A,B"

  friend bool operator==(const Curve& l, const Curve& r) {
    return l.data_ == r.data_ || (l.a() == r.a() && l.b() == r.b());
  }

 private:
  struct Data {
    mpz_class a, b, delta;
    mpq_class j;
  };
  explicit Curve(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Parse "A,B".
Curve parse_curve(std::string_view text);

/// A Q-rational point on a Curve: the identity O or an affine pair (x, y).
class Point {
 public:
  static Point identity(const Curve& curve);
  /// Throws NotOnCurve if y^2 != x^3 + Ax + B.
  static Point affine(const Curve& curve, mpq_class x, mpq_class y);

  const Curve& curve() const { return curve_; }
  bool is_identity() const { return identity_; }
  /// Coordinates; only meaningful for affine points.
  const mpq_class& x() const { return x_; }
  const mpq_class& y() const { return y_; }

  /// "xn/xd,yn/yd" or "O".
  std::string to_string() const;

  friend bool operator==(const Point& l, const Point& r);
  friend Point add(const Point& p, const Point& q);
  friend Point neg(const Point& p);

 private:
  Point(Curve c, bool id, mpq_class x, mpq_class y)
      : curve_(std::move(c)), identity_(id), x_(std::move(x)), y_(std::move(y)) {}
  Curve curve_;
  bool identity_;
  mpq_class x_, y_;
};

Point parse_point(const Curve& curve, std::string_view text);

/// Chord-and-tangent addition with y3 = lambda (x1 - x3) - y1.
/// Throws CurveMismatch when the points live on different curves.
Point add(const Point& p, const Point& q);
Point neg(const Point& p);
Point sub(const Point& p, const Point& q);
Point dbl(const Point& p);
/// [m]P by double-and-add; [-m]P = neg([m]P).
Point scalar_mul(std::int64_t m, const Point& p);
Point scalar_mul(const mpz_class& m, const Point& p);

/// Generator (1, 1) of E0(Q).
Point e0_generator();

}  // namespace ecbounds
