// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/heights.hpp"

#include <cmath>
#include <string>

#include "ecbounds/constants.hpp"
#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

// Coprime integer representative of a projective point over Q.
std::vector<mpz_class> primitive_integers(const std::vector<mpq_class>& coords) {
  if (coords.empty()) fail(ErrorCode::AllZero, "empty coordinate list");
  mpz_class l = 1;
  for (const auto& c : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(coords.size());
  mpz_class g = 0;
  for (const auto& c : coords) {
    out.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) fail(ErrorCode::AllZero, "all coordinates are zero");
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

Interval third() { return Interval::from_rational(mpq_class(1, 3)); }

}  // namespace

Interval weil_height_projective(const std::vector<mpq_class>& coords) {
  mpz_class m = 0;
  for (const auto& v : primitive_integers(coords)) {
    if (abs(v) > m) m = abs(v);
  }
  return clamp_nonnegative(log_abs(m));
}

Interval h2_projective(const std::vector<mpq_class>& coords) {
  mpz_class sum = 0;
  for (const auto& v : primitive_integers(coords)) sum += v * v;
  return clamp_nonnegative(ldexp(log_abs(sum), -1));
}

Interval weil_height(const mpq_class& x) { return weil_height_projective({x, mpq_class(1)}); }

Interval h_infty(const mpq_class& x) {
  const mpq_class a = abs(x);
  if (a <= 1) return {0.0, 0.0};
  return clamp_nonnegative(log_positive(a));
}

Interval hw(const Curve& curve) {
  Interval out{0.0, 0.0};
  if (curve.a() != 0) out = max(out, ldexp(log_abs(curve.a()), -1));
  if (curve.b() != 0) out = max(out, third() * log_abs(curve.b()));
  return out;
}

DifferenceEnvelope difference_envelope(const Curve& curve) {
  const Interval h_delta = log_abs(curve.discriminant());
  const Interval hj = weil_height(curve.j_invariant());
  const Interval hj_inf = h_infty(curve.j_invariant());
  const Interval twelfth = Interval::from_rational(mpq_class(1, 12));
  const Interval twenty_fourth = Interval::from_rational(mpq_class(1, 24));
  DifferenceEnvelope e;
  e.lower = twenty_fourth * hj + twelfth * h_delta + twelfth * hj_inf +
            Interval::from_decimal("0.973");
  e.upper = twelfth * h_delta + twelfth * hj_inf + Interval::from_decimal("1.07");
  return e;
}

HeightInterval neron_tate(const Point& p, double tol, const NeronTateOptions& options) {
  if (!(tol > 0)) fail(ErrorCode::BadParams, "tolerance must be positive");
  if (p.is_identity()) return {};
  const Curve& curve = p.curve();
  const DifferenceEnvelope env = difference_envelope(curve);
  const double c = std::max(env.lower.hi, env.upper.hi);
  int depth = 0;
  while (std::ldexp(c, -2 * depth) > tol / 2) {
    ++depth;
    if (depth > options.max_depth) {
      fail(ErrorCode::PrecisionUnreachable,
           "tolerance " + format_real(tol) + " needs more than " +
               std::to_string(options.max_depth) + " doublings");
    }
  }
  const mpq_class a(curve.a());
  const mpq_class b(curve.b());
  mpq_class x = p.x();
  std::vector<mpq_class> seen{x};
  for (int i = 0; i < depth; ++i) {
    const mpq_class f = curve.rhs(x);
    if (f == 0) return {0.0, 0.0, i};  // [2^(i+1)]P = O
    const mpq_class x2 = x * x;
    mpq_class next = (x2 * x2 - 2 * a * x2 - 8 * b * x + a * a) / (4 * f);
    next.canonicalize();
    for (const auto& s : seen) {
      if (s == next) return {0.0, 0.0, i + 1};  // orbit closes: torsion
    }
    seen.push_back(next);
    x = std::move(next);
  }
  const Interval half_h = ldexp(weil_height(x), -1);
  HeightInterval out;
  out.depth = depth;
  out.lo = std::max(0.0, ldexp(half_h - env.lower, -2 * depth).lo);
  out.hi = ldexp(half_h + env.upper, -2 * depth).hi;
  return out;
}

HeightInterval canonical_height_product(const std::vector<Point>& points, double tol,
                                        const NeronTateOptions& options) {
  HeightInterval out;
  if (points.empty()) return out;
  const double each = tol / static_cast<double>(points.size());
  Interval sum{0.0, 0.0};
  for (const auto& p : points) {
    const HeightInterval h = neron_tate(p, each, options);
    sum += h.interval();
    out.depth = std::max(out.depth, h.depth);
  }
  out.lo = std::max(0.0, sum.lo);
  out.hi = sum.hi;
  return out;
}

HeightComparison height_comparison_report(const Point& p, double tol,
                                          const NeronTateOptions& options) {
  HeightComparison r;
  r.hhat = neron_tate(p, tol, options);
  r.tolerance = r.hhat.width() + 1e-9;
  if (p.is_identity()) return r;
  r.affine = true;
  const std::vector<mpq_class> coords{p.x(), p.y(), mpq_class(1)};
  r.h = weil_height_projective(coords);
  r.h2 = h2_projective(coords);
  r.hx = weil_height(p.x());
  const Interval hhat = r.hhat.interval();
  const Interval w = hw(p.curve());
  const DifferenceEnvelope env = difference_envelope(p.curve());
  const Interval log2 = log2_interval();

  r.h_le_h2 = (r.h2 - r.h).hi;
  r.h2_le_h_plus = (r.h + ldexp(log3_interval(), -1) - r.h2).hi;
  const Interval diff = hhat - ldexp(r.hx, -1);
  r.silverman_lower = (diff + env.lower).hi;
  r.silverman_upper = (env.upper - diff).hi;
  const Interval zimmer = third() * r.h - hhat;
  r.zimmer_lower = (zimmer + ldexp(w, -1) + Interval::from_rational(mpq_class(7, 6)) * log2).hi;
  r.zimmer_upper = (w + ldexp(log2, 1) - zimmer).hi;

  const std::pair<const char*, double> checks[] = {
      {"h <= h2", r.h_le_h2},
      {"h2 <= h + log(3)/2", r.h2_le_h_plus},
      {"difference envelope (lower)", r.silverman_lower},
      {"difference envelope (upper)", r.silverman_upper},
      {"Weierstrass-height envelope (lower)", r.zimmer_lower},
      {"Weierstrass-height envelope (upper)", r.zimmer_upper},
  };
  for (const auto& [name, slack] : checks) {
    if (slack < -r.tolerance) {
      fail(ErrorCode::EnvelopeViolation,
           std::string(name) + " fails at " + p.to_string() + " by " + format_real(-slack));
    }
  }
  return r;
}

double mu_conversion(double mu_hat, int n, const Curve& curve, MuDirection direction) {
  const Bindings b{hw(curve).hi, 0.0};
  if (direction == MuDirection::Up) return 3 * mu_hat + c3(n).evaluate(b);
  return 3 * mu_hat - 3 * c2(n).evaluate(b);
}

}  // namespace ecbounds
