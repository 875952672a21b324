// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/curve.hpp"

#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

Curve Curve::create(const mpz_class& a, const mpz_class& b) {
  auto d = std::make_shared<Data>();
  d->a = a;
  d->b = b;
  d->delta = -16 * (4 * a * a * a + 27 * b * b);
  if (d->delta == 0) {
    fail(ErrorCode::SingularCurve, "discriminant of y^2 = x^3 + (" + a.get_str() + ")x + (" +
                                       b.get_str() + ") vanishes");
  }
  const mpz_class four_a = 4 * a;
  d->j = mpq_class(-1728 * four_a * four_a * four_a, d->delta);
  d->j.canonicalize();
  return Curve(std::move(d));
}

Curve Curve::e0() {
  static const Curve curve = create(1, -1);
  return curve;
}

mpq_class Curve::rhs(const mpq_class& x) const { return x * x * x + a() * x + b(); }

bool Curve::contains(const mpq_class& x, const mpq_class& y) const { return y * y == rhs(x); }

std::string Curve::to_string() const { return a().get_str() + "," + b().get_str(); }

Curve parse_curve(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) fail(ErrorCode::ParseError, "curve must be 'A,B'");
  mpz_class a, b;
  if (a.set_str(std::string(text.substr(0, comma)), 10) != 0 ||
      b.set_str(std::string(text.substr(comma + 1)), 10) != 0) {
    fail(ErrorCode::ParseError, "curve coefficients must be integers: '" + std::string(text) + "'");
  }
  return Curve::create(a, b);
}

Point Point::identity(const Curve& curve) { return Point(curve, true, 0, 0); }

Point Point::affine(const Curve& curve, mpq_class x, mpq_class y) {
  if (!curve.contains(x, y)) {
    fail(ErrorCode::NotOnCurve, "(" + x.get_str() + ", " + y.get_str() + ") not on curve " +
                                    curve.to_string());
  }
  return Point(curve, false, std::move(x), std::move(y));
}

std::string Point::to_string() const {
  if (identity_) return "O";
  return rational_string(x_) + "," + rational_string(y_);
}

bool operator==(const Point& l, const Point& r) {
  if (!(l.curve_ == r.curve_)) return false;
  if (l.identity_ || r.identity_) return l.identity_ == r.identity_;
  return l.x_ == r.x_ && l.y_ == r.y_;
}

Point parse_point(const Curve& curve, std::string_view text) {
  if (text == "O") return Point::identity(curve);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) fail(ErrorCode::ParseError, "point must be 'x,y' or 'O'");
  return Point::affine(curve, parse_rational(text.substr(0, comma)),
                       parse_rational(text.substr(comma + 1)));
}

Point add(const Point& p, const Point& q) {
  if (!(p.curve() == q.curve())) {
    fail(ErrorCode::CurveMismatch, "curves " + p.curve().to_string() + " and " +
                                       q.curve().to_string());
  }
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  mpq_class lambda;
  if (p.x() == q.x()) {
    if (p.y() + q.y() == 0) return Point::identity(p.curve());
    lambda = (3 * p.x() * p.x() + p.curve().a()) / (2 * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  mpq_class x3 = lambda * lambda - p.x() - q.x();
  mpq_class y3 = lambda * (p.x() - x3) - p.y();
  // Closure under the group law; skip the on-curve re-check.
  return Point(p.curve(), false, std::move(x3), std::move(y3));
}

Point neg(const Point& p) {
  if (p.is_identity()) return p;
  return Point(p.curve(), false, p.x(), -p.y());
}

Point sub(const Point& p, const Point& q) { return add(p, neg(q)); }

Point dbl(const Point& p) { return add(p, p); }

Point scalar_mul(const mpz_class& m, const Point& p) {
  if (m < 0) return neg(scalar_mul(mpz_class(-m), p));
  Point acc = Point::identity(p.curve());
  const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  for (auto i = static_cast<long>(bits) - 1; i >= 0 && m != 0; --i) {
    acc = dbl(acc);
    if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = add(acc, p);
  }
  return acc;
}

Point scalar_mul(std::int64_t m, const Point& p) {
  mpz_class mz;
  mpz_set_si(mz.get_mpz_t(), static_cast<long>(m));
  return scalar_mul(mz, p);
}

Point e0_generator() { return Point::affine(Curve::e0(), 1, 1); }

}  // namespace ecbounds
