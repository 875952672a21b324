// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

constexpr mpfr_prec_t kLogPrecision = 192;

double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

// Rounding error of x + y and x * y is exactly representable; use it to step
// outward only when the floating-point result is inexact.
double sum_error(double x, double y, double s) {
  const double bb = s - x;
  return (x - (s - bb)) + (y - bb);
}

double add_down(double x, double y) {
  const double s = x + y;
  return sum_error(x, y, s) < 0 || !std::isfinite(s) ? down(s) : s;
}
double add_up(double x, double y) {
  const double s = x + y;
  return sum_error(x, y, s) > 0 || !std::isfinite(s) ? up(s) : s;
}
double mul_down(double x, double y) {
  const double p = x * y;
  return std::fma(x, y, -p) < 0 || !std::isfinite(p) ? down(p) : p;
}
double mul_up(double x, double y) {
  const double p = x * y;
  return std::fma(x, y, -p) > 0 || !std::isfinite(p) ? up(p) : p;
}

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, kLogPrecision); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// log(num/den) rounded in direction rnd, for positive num, den.
double log_ratio(const mpz_class& num, const mpz_class& den, mpfr_rnd_t rnd) {
  const mpfr_rnd_t opposite = rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD;
  Mpfr a, b;
  mpfr_set_z(a.get(), num.get_mpz_t(), rnd);
  mpfr_set_z(b.get(), den.get_mpz_t(), opposite);
  mpfr_log(a.get(), a.get(), rnd);
  mpfr_log(b.get(), b.get(), opposite);
  mpfr_sub(a.get(), a.get(), b.get(), rnd);
  return mpfr_get_d(a.get(), rnd);
}

}  // namespace

Interval Interval::from_decimal(std::string_view text) {
  Mpfr v;
  const std::string s(text);
  if (mpfr_set_str(v.get(), s.c_str(), 10, MPFR_RNDD) != 0) {
    fail(ErrorCode::ParseError, "not a decimal literal: " + s);
  }
  Interval out;
  out.lo = mpfr_get_d(v.get(), MPFR_RNDD);
  mpfr_set_str(v.get(), s.c_str(), 10, MPFR_RNDU);
  out.hi = mpfr_get_d(v.get(), MPFR_RNDU);
  return out;
}

Interval Interval::from_rational(const mpq_class& q) {
  Mpfr v;
  Interval out;
  mpfr_set_q(v.get(), q.get_mpq_t(), MPFR_RNDD);
  out.lo = mpfr_get_d(v.get(), MPFR_RNDD);
  mpfr_set_q(v.get(), q.get_mpq_t(), MPFR_RNDU);
  out.hi = mpfr_get_d(v.get(), MPFR_RNDU);
  return out;
}

Interval& Interval::operator+=(const Interval& o) {
  lo = add_down(lo, o.lo);
  hi = add_up(hi, o.hi);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  const double l = add_down(lo, -o.hi);
  hi = add_up(hi, -o.lo);
  lo = l;
  return *this;
}

Interval operator+(Interval a, const Interval& b) { return a += b; }
Interval operator-(Interval a, const Interval& b) { return a -= b; }

Interval operator*(const Interval& a, const Interval& b) {
  const double l[] = {mul_down(a.lo, b.lo), mul_down(a.lo, b.hi), mul_down(a.hi, b.lo),
                      mul_down(a.hi, b.hi)};
  const double h[] = {mul_up(a.lo, b.lo), mul_up(a.lo, b.hi), mul_up(a.hi, b.lo),
                      mul_up(a.hi, b.hi)};
  return {*std::min_element(l, l + 4), *std::max_element(h, h + 4)};
}

Interval operator*(double s, const Interval& a) { return Interval::point(s) * a; }

Interval ldexp(const Interval& a, int e) { return {std::ldexp(a.lo, e), std::ldexp(a.hi, e)}; }

Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval sqrt(const Interval& a) {
  const double l = a.lo <= 0 ? 0.0 : std::sqrt(a.lo);
  const double h = std::sqrt(std::max(a.hi, 0.0));
  return {mul_up(l, l) > a.lo ? down(l) : l, mul_down(h, h) < a.hi ? up(h) : h};
}

Interval clamp_nonnegative(const Interval& a) {
  return {std::max(a.lo, 0.0), std::max(a.hi, 0.0)};
}

Interval log_abs(const mpz_class& z) {
  if (z == 0) fail(ErrorCode::BadParams, "log of zero");
  const mpz_class a = abs(z);
  const mpz_class one = 1;
  if (a == 1) return {0.0, 0.0};
  return {log_ratio(a, one, MPFR_RNDD), log_ratio(a, one, MPFR_RNDU)};
}

Interval log_positive(const mpq_class& q) {
  if (q <= 0) fail(ErrorCode::BadParams, "log of a nonpositive rational");
  if (q == 1) return {0.0, 0.0};
  return {log_ratio(q.get_num(), q.get_den(), MPFR_RNDD),
          log_ratio(q.get_num(), q.get_den(), MPFR_RNDU)};
}

Interval log2_interval() { return log_abs(mpz_class(2)); }
Interval log3_interval() { return log_abs(mpz_class(3)); }

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_real15(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
  return std::string(buf, ptr);
}

}  // namespace ecbounds
