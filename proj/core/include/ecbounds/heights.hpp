// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <vector>

#include "ecbounds/curve.hpp"
#include "ecbounds/interval.hpp"

namespace ecbounds {

/// Logarithmic Weil height of (c_0 : ... : c_n) over Q: log of the largest
/// absolute value after scaling to coprime integers. AllZero if every c_i = 0.
Interval weil_height_projective(const std::vector<mpq_class>& coords);
/// Same, with the euclidean norm at the archimedean place.
Interval h2_projective(const std::vector<mpq_class>& coords);
/// h(x) = h(x : 1).
Interval weil_height(const mpq_class& x);
/// Archimedean contribution log max(1, |x|).
Interval h_infty(const mpq_class& x);
/// max(log|A| / 2, log|B| / 3, 0) for integer A, B.
Interval hw(const Curve& curve);

/// Constants bounding h_hat(P) - h(x(P)) / 2 from below (-lower) and above (upper).
struct DifferenceEnvelope {
  Interval lower;  // h(j)/24 + h(Delta)/12 + h_infty(j)/12 + 0.973
  Interval upper;  // h(Delta)/12 + h_infty(j)/12 + 1.07
};
DifferenceEnvelope difference_envelope(const Curve& curve);

/// Certified enclosure of a canonical height, with the doubling depth used.
struct HeightInterval {
  double lo = 0.0;
  double hi = 0.0;
  int depth = 0;

  double width() const { return hi - lo; }
  double mid() const { return lo + 0.5 * (hi - lo); }
  Interval interval() const { return {lo, hi}; }
};

struct NeronTateOptions {
  int max_depth = 12;
};

/// h_hat(P), normalized so h_hat(P) ~ h(x(P)) / 2, enclosed by pushing P
/// through n doublings and applying the difference envelope at [2^n]P.
/// Width <= tol. Torsion points give [0, 0]. PrecisionUnreachable when the
/// depth needed for tol exceeds options.max_depth.
HeightInterval neron_tate(const Point& p, double tol, const NeronTateOptions& options = {});

/// Sum of coordinate canonical heights of a point of E^N; total width <= tol.
HeightInterval canonical_height_product(const std::vector<Point>& points, double tol,
                                        const NeronTateOptions& options = {});

/// Signed slacks of the height inequalities at one point. A slack is
/// (larger side) - (smaller side); each must be >= -tolerance.
struct HeightComparison {
  bool affine = false;
  Interval h;        // h(x : y : 1)
  Interval h2;       // h_2(x : y : 1)
  Interval hx;       // h(x)
  HeightInterval hhat;
  double tolerance = 0.0;
  double h_le_h2 = 0.0;
  double h2_le_h_plus = 0.0;       // h + log(3)/2 - h2
  double silverman_lower = 0.0;    // h_hat - h(x)/2 + lower
  double silverman_upper = 0.0;    // upper - (h_hat - h(x)/2)
  double zimmer_lower = 0.0;       // h(P)/3 - h_hat + hW/2 + 7/6 log 2
  double zimmer_upper = 0.0;       // hW + 2 log 2 - (h(P)/3 - h_hat)
};
/// Throws EnvelopeViolation if a slack falls below -tolerance.
HeightComparison height_comparison_report(const Point& p, double tol,
                                          const NeronTateOptions& options = {});

enum class MuDirection { Up, Down };
/// Up: 3 mu_hat + c3(E, N); down: 3 mu_hat - 3 c2(E, N).
double mu_conversion(double mu_hat, int n, const Curve& curve, MuDirection direction);

}  // namespace ecbounds
