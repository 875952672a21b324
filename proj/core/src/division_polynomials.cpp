// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/division_polynomials.hpp"

#include <algorithm>
#include <string>

#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

int x_degree(const ZPoly& p) { return p.degree(); }
int x_degree(const ABXPoly& p) { return p.x_degree(); }

template <class P>
int y_degree(const YPoly<P>& p) {
  const int dy = x_degree(p.y_part);
  return std::max(x_degree(p.c), dy < 0 ? -1 : dy + 1);
}

bool leading_is(const ZPoly& p, const mpz_class& c) { return !p.is_zero() && p.leading() == c; }
bool leading_is(const ABXPoly& p, const mpz_class& c) {
  return !p.is_zero() && p.x_coefficient(p.x_degree()) == ABXPoly::constant(c);
}

void require_positive(int m) {
  if (m < 1) {
    fail(ErrorCode::BadParams, "division polynomial index must be >= 1, got " + std::to_string(m));
  }
}

template <class P>
DegreeReport measure(const DivisionPolynomialSystem<P>& sys, int m) {
  require_positive(m);
  DegreeReport r;
  r.m = m;
  const DivisionPoly<P> psi = sys.psi(m);
  const P phi = sys.phi(m);
  const P psi_sq = sys.psi_squared(m);
  r.d_phi = x_degree(phi);
  r.d_psi_sq = x_degree(psi_sq);
  r.d_psi = psi.parity == Parity::Odd ? x_degree(psi.body) : x_degree(psi.body) + 1;
  r.d_psi_cubed = y_degree(sys.psi_cubed(m));
  r.d_omega = y_degree(sys.omega(m));
  r.phi_monic = leading_is(phi, 1);
  r.psi_sq_leading_m2 = leading_is(psi_sq, mpz_class(m) * m);

  const int m2 = m * m;
  auto check = [m](bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::DegreeLawViolation, "m=" + std::to_string(m) + ": " + what);
  };
  check(r.d_phi == m2, "d(phi) = " + std::to_string(r.d_phi));
  check(r.d_psi_sq == m2 - 1, "d(psi^2) = " + std::to_string(r.d_psi_sq));
  check(2 * r.d_psi <= m2 + 1, "d(psi) = " + std::to_string(r.d_psi));
  check(2 * r.d_psi_cubed <= 3 * m2 - 1, "d(psi^3) = " + std::to_string(r.d_psi_cubed));
  check(2 * r.d_omega <= 3 * (m2 + 1), "d(omega) = " + std::to_string(r.d_omega));
  return r;
}

}  // namespace

template <class P>
DivisionPolynomialSystem<P>::DivisionPolynomialSystem(P one, P x, P a, P b)
    : one_(std::move(one)), x_(std::move(x)), a_(std::move(a)), b_(std::move(b)) {
  rhs_ = x_ * x_ * x_ + a_ * x_ + b_;
  rhs_sq_ = rhs_ * rhs_;
}

template <class P>
P DivisionPolynomialSystem<P>::body(int m) const {
  if (m == -1) return P() - one_;  // psi_{-1} = -psi_1
  return body_cached(m);
}

template <class P>
const P& DivisionPolynomialSystem<P>::body_cached(int m) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (bodies_.empty()) {
    const P& x = x_;
    const P x2 = x * x;
    const P x3 = x2 * x;
    const P x4 = x2 * x2;
    const P a2 = a_ * a_;
    bodies_.push_back(P());  // psi_0 = 0
    bodies_.push_back(one_);
    bodies_.push_back(one_);  // psi_2 = 2y
    bodies_.push_back(x4 * mpz_class(3) + a_ * x2 * mpz_class(6) + b_ * x * mpz_class(12) - a2);
    bodies_.push_back((x3 * x3 + a_ * x4 * mpz_class(5) + b_ * x3 * mpz_class(20) -
                       a2 * x2 * mpz_class(5) - a_ * b_ * x * mpz_class(4) -
                       b_ * b_ * mpz_class(8) - a2 * a_) *
                      mpz_class(2));  // psi_4 = 2y * body
  }
  while (static_cast<int>(bodies_.size()) <= m) {
    const int n = static_cast<int>(bodies_.size());
    const int k = n / 2;
    const auto& b = bodies_;
    auto at = [&b](int i) -> const P& { return b[static_cast<std::size_t>(i)]; };
    P next;
    if (n % 2 == 1) {
      const P lhs = at(k + 2) * (at(k) * at(k) * at(k));
      const P rhs = at(k - 1) * (at(k + 1) * at(k + 1) * at(k + 1));
      // (2y)^4 = 16 F^2 lands on whichever product carries the even-index factors.
      if (k % 2 == 0) {
        next = rhs_sq_ * lhs * mpz_class(16) - rhs;
      } else {
        next = lhs - rhs_sq_ * rhs * mpz_class(16);
      }
    } else {
      next = at(k) * (at(k + 2) * (at(k - 1) * at(k - 1)) - at(k - 2) * (at(k + 1) * at(k + 1)));
    }
    bodies_.push_back(std::move(next));
  }
  return bodies_[static_cast<std::size_t>(m)];
}

template <class P>
DivisionPoly<P> DivisionPolynomialSystem<P>::psi(int m) const {
  require_positive(m);
  return {m, m % 2 == 0 ? Parity::Even : Parity::Odd, body(m)};
}

template <class P>
P DivisionPolynomialSystem<P>::psi_squared(int m) const {
  require_positive(m);
  const P& b = body_cached(m);
  P sq = b * b;
  if (m % 2 == 0) sq = rhs_ * sq * mpz_class(4);
  return sq;
}

template <class P>
YPoly<P> DivisionPolynomialSystem<P>::psi_cubed(int m) const {
  require_positive(m);
  const P& b = body_cached(m);
  P cu = b * b * b;
  if (m % 2 == 1) return {std::move(cu), P()};
  return {P(), rhs_ * cu * mpz_class(8)};
}

template <class P>
P DivisionPolynomialSystem<P>::phi(int m) const {
  require_positive(m);
  const P& b = body_cached(m);
  const P cross = body(m + 1) * body(m - 1);
  if (m % 2 == 1) return x_ * (b * b) - rhs_ * cross * mpz_class(4);
  return rhs_ * x_ * (b * b) * mpz_class(4) - cross;
}

template <class P>
P DivisionPolynomialSystem<P>::omega_numerator(int m) const {
  const P lo = body(m - 1);
  const P hi = body(m + 1);
  return body(m + 2) * (lo * lo) - body(m - 2) * (hi * hi);
}

template <class P>
YPoly<P> DivisionPolynomialSystem<P>::omega(int m) const {
  require_positive(m);
  if (m % 2 == 1) return {P(), omega_numerator(m)};
  return {omega_numerator(m).divided_exactly(2), P()};
}

template class DivisionPolynomialSystem<ZPoly>;
template class DivisionPolynomialSystem<ABXPoly>;

GenericDivisionPolynomials make_generic_division_polynomials() {
  return GenericDivisionPolynomials(ABXPoly::constant(1), ABXPoly::var_x(), ABXPoly::var_a(),
                                    ABXPoly::var_b());
}

CurveDivisionPolynomials make_division_polynomials(const Curve& curve) {
  return CurveDivisionPolynomials(ZPoly::constant(1), ZPoly::monomial(1, 1),
                                  ZPoly::constant(curve.a()), ZPoly::constant(curve.b()));
}

DegreeReport degree_report(const CurveDivisionPolynomials& system, int m) {
  return measure(system, m);
}

DegreeReport degree_report(const GenericDivisionPolynomials& system, int m) {
  return measure(system, m);
}

Point mul_via_division_polys(const CurveDivisionPolynomials& system, int m, const Point& p) {
  require_positive(m);
  if (p.is_identity()) return p;
  const mpq_class& x = p.x();
  const mpq_class& y = p.y();
  const mpq_class psi_sq = system.psi_squared(m).evaluate(x);
  if (psi_sq == 0) {
    fail(ErrorCode::TorsionDenominator, "psi_" + std::to_string(m) + " vanishes at " + p.to_string());
  }
  const YPoly<ZPoly> cu = system.psi_cubed(m);
  const YPoly<ZPoly> om = system.omega(m);
  const mpq_class psi_cu = cu.c.evaluate(x) + y * cu.y_part.evaluate(x);
  const mpq_class omega = om.c.evaluate(x) + y * om.y_part.evaluate(x);
  return Point::affine(p.curve(), system.phi(m).evaluate(x) / psi_sq, omega / psi_cu);
}

}  // namespace ecbounds
