// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ecbounds {

/// Closed interval [lo, hi] of doubles. Every arithmetic operation rounds
/// outward by one ulp per endpoint, so the enclosure survives round-to-nearest.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double v) { return {v, v}; }
  /// Tight enclosure of a decimal literal such as "0.973".
  static Interval from_decimal(std::string_view text);
  static Interval from_rational(const mpq_class& q);

  double width() const { return hi - lo; }
  double mid() const { return lo + 0.5 * (hi - lo); }
  bool contains(double v) const { return lo <= v && v <= hi; }

  Interval operator-() const { return {-hi, -lo}; }
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
};

Interval operator+(Interval a, const Interval& b);
Interval operator-(Interval a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(double s, const Interval& a);
/// Exact scaling by 2^e (no rounding unless the result leaves the normal range).
Interval ldexp(const Interval& a, int e);
Interval max(const Interval& a, const Interval& b);
Interval sqrt(const Interval& a);
/// Clamp the lower end at zero, for quantities known to be nonnegative.
Interval clamp_nonnegative(const Interval& a);

/// Certified enclosure of log|z|, z != 0.
Interval log_abs(const mpz_class& z);
/// Certified enclosure of log(q) for q > 0.
Interval log_positive(const mpq_class& q);
Interval log2_interval();
Interval log3_interval();

/// Shortest round-trip decimal rendering of a double.
std::string format_real(double v);
/// Fifteen significant digits, as used in text reports.
std::string format_real15(double v);

}  // namespace ecbounds
