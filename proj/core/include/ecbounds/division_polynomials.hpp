// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <deque>
#include <mutex>

#include "ecbounds/curve.hpp"
#include "ecbounds/polynomial.hpp"

namespace ecbounds {

/// c + y * y_part, with every y^2 already replaced by x^3 + Ax + B.
template <class P>
struct YPoly {
  P c;
  P y_part;
};

enum class Parity { Odd, Even };

/// psi_m stored as its y-free body: psi_m = body for odd m, 2y * body for even m.
template <class P>
struct DivisionPoly {
  int m = 0;
  Parity parity = Parity::Odd;
  P body;
};

/// The psi/phi/omega system of a Weierstrass curve, over a coefficient model P:
/// ABXPoly keeps A and B symbolic, ZPoly specializes them to a concrete curve.
/// Bodies are memoized; concurrent callers share one cache under a lock.
template <class P>
class DivisionPolynomialSystem {
 public:
  /// The constant 1, x, A and B in the chosen model.
  DivisionPolynomialSystem(P one, P x, P a, P b);

  DivisionPoly<P> psi(int m) const;
  P psi_squared(int m) const;
  YPoly<P> psi_cubed(int m) const;
  P phi(int m) const;
  YPoly<P> omega(int m) const;

  const P& x() const { return x_; }
  const P& rhs() const { return rhs_; }

 private:
  P body(int m) const;
  const P& body_cached(int m) const;
  P omega_numerator(int m) const;

  P one_, x_, a_, b_, rhs_, rhs_sq_;
  mutable std::mutex mutex_;
  mutable std::deque<P> bodies_;  // index m >= 0; deque keeps references stable
};

using GenericDivisionPolynomials = DivisionPolynomialSystem<ABXPoly>;
using CurveDivisionPolynomials = DivisionPolynomialSystem<ZPoly>;

/// Symbolic system over Z[A, B].
GenericDivisionPolynomials make_generic_division_polynomials();
/// System specialized to a curve's integer A, B.
CurveDivisionPolynomials make_division_polynomials(const Curve& curve);

/// Degrees count x with weight 1 and y with weight 1 after y^2 elimination;
/// A and B are constants.
struct DegreeReport {
  int m = 0;
  int d_phi = 0;
  int d_psi = 0;
  int d_psi_sq = 0;
  int d_psi_cubed = 0;
  int d_omega = 0;
  bool phi_monic = false;           // leading coefficient of phi_m is 1
  bool psi_sq_leading_m2 = false;   // leading coefficient of psi_m^2 is m^2
};

/// Measures the degrees and throws DegreeLawViolation unless
/// d_phi = m^2, d_psi_sq = m^2 - 1, d_psi <= (m^2+1)/2,
/// d_psi_cubed <= (3m^2-1)/2 and d_omega <= 3(m^2+1)/2.
DegreeReport degree_report(const CurveDivisionPolynomials& system, int m);
DegreeReport degree_report(const GenericDivisionPolynomials& system, int m);

/// [m]P = (phi_m/psi_m^2, omega_m/psi_m^3) evaluated at P.
/// Throws TorsionDenominator when psi_m(P) = 0.
Point mul_via_division_polys(const CurveDivisionPolynomials& system, int m, const Point& p);

}  // namespace ecbounds
