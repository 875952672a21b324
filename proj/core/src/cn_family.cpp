// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/cn_family.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "ecbounds/bounds.hpp"
#include "ecbounds/chow.hpp"
#include "ecbounds/constants.hpp"
#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

void require_n(int n) {
  if (n < 1) fail(ErrorCode::BadParams, "n must be >= 1, got " + std::to_string(n));
}

const Symbolic kLog3 = Symbolic::atom(Atom::Log3);

// [k]g for -radius <= k <= radius, index k + radius.
std::vector<Point> multiples(std::int64_t radius) {
  const Point g = e0_generator();
  std::vector<Point> pos{Point::identity(g.curve())};
  for (std::int64_t k = 1; k <= radius; ++k) pos.push_back(add(pos.back(), g));
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(2 * radius + 1));
  for (std::int64_t k = radius; k >= 1; --k) out.push_back(neg(pos[static_cast<std::size_t>(k)]));
  for (std::int64_t k = 0; k <= radius; ++k) out.push_back(pos[static_cast<std::size_t>(k)]);
  return out;
}

mpq_class power(const mpq_class& x, int n) {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// The x with (x, y) on E0 for the given y, if rational. Writing y = v / w^3 and
// x = u / w^2, u is the unique real root of u^3 + w^4 u - (w^6 + v^2).
bool solve_x_for_y(const mpq_class& y, mpq_class& x) {
  mpz_class w;
  if (mpz_root(w.get_mpz_t(), y.get_den_mpz_t(), 3) == 0) return false;
  const mpz_class w2 = w * w;
  const mpz_class w4 = w2 * w2;
  const mpz_class c = w4 * w2 + y.get_num() * y.get_num();
  mpz_class lo = 0;
  mpz_class hi;
  mpz_root(hi.get_mpz_t(), c.get_mpz_t(), 3);
  hi += 1;
  auto f = [&](const mpz_class& u) -> mpz_class { return u * u * u + w4 * u - c; };
  while (lo < hi) {
    mpz_class mid = (lo + hi) / 2;
    if (f(mid) < 0) lo = mid + 1;
    else hi = mid;
  }
  if (f(lo) != 0) return false;
  x = mpq_class(lo, w2);
  x.canonicalize();
  return true;
}

bool solution_order(const CnSolution& l, const CnSolution& r) {
  return l.a != r.a ? l.a < r.a : l.b < r.b;
}

}  // namespace

mpz_class cn_degree(int n) {
  require_n(n);
  const ChowClass l = ChowClass::monomial({1, 0});
  const ChowClass m = ChowClass::monomial({0, 1});
  const ChowClass cut = ChowClass::linear({mpz_class(n), mpz_class(1)});
  const ChowClass first = ChowClass::monomial({1, 0}, 3);
  const ChowClass second = ChowClass::monomial({0, 1}, 3);
  return chow_product({cut, first, second, l + m});
}

CnGenus cn_genus(int n) {
  require_n(n);
  CnGenus g;
  g.map_degree = 6L * n;
  for (int i = 1; i <= 4; ++i) g.fibers.push_back({"beta_" + std::to_string(i), 2L * n, 2, 2L * n});
  g.fibers.push_back({"0", 6, n, 0});
  for (int i = 1; i <= 3; ++i) {
    g.fibers.push_back({"alpha_" + std::to_string(i) + "^n", 3, 2, 6L * n - 6});
  }
  g.fibers.push_back({"infinity", 1, 6L * n, 0});
  g.ramification_sum = 0;
  bool degrees_ok = true;
  for (const auto& f : g.fibers) {
    g.ramification_sum += f.contribution();
    degrees_ok = degrees_ok && f.total_degree() == g.map_degree;
  }
  const long euler = 2 * g.map_degree - g.ramification_sum;  // 2 - 2g
  g.genus = static_cast<int>((2 - euler) / 2);
  g.balanced = degrees_ok && (2 - euler) % 2 == 0 && 2 - 2L * g.genus == euler;
  return g;
}

EssentialMinimumChain cn_essential_min_chain(int n) {
  require_n(n);
  const Symbolic half(mpq_class(1, 2));
  const Symbolic inv_n(mpq_class(1, n));
  EssentialMinimumChain c;
  c.h_zeta = Symbolic();
  c.h_y2 = half * kLog3;
  c.h_x1 = Symbolic(mpq_class(1, 2L * n)) * kLog3;
  c.h_y1 = inv_n * kLog3 + half * kLog3;
  c.h_x1y1 = Symbolic(mpq_class(n + 3, 2L * n)) * kLog3;
  c.h_zeta_y2 = half * kLog3;
  // h_2 <= h + log(3)/2 for points of P_2.
  c.h2_x1y1 = c.h_x1y1 + half * kLog3;
  c.h2_zeta_y2 = c.h_zeta_y2 + half * kLog3;
  c.total = c.h2_x1y1 + c.h2_zeta_y2;
  return c;
}

double cn_essential_min_bound(int n) { return cn_essential_min_chain(n).total.evaluate(); }

Symbolic cn_curve_height_bound(int n) {
  return Symbolic(2) * Symbolic(mpq_class(cn_degree(n))) * cn_essential_min_chain(n).total;
}

double cn_headline_point_bound(int n) {
  require_n(n);
  const double k = n + 1.0;
  return 8.253e38 * k * k * k;
}

BoundCertificate cn_point_height_bound(int n) {
  require_n(n);
  Theorem14Input in;
  in.variant = Theorem14Variant::TransverseE2;
  in.h_c = cn_curve_height_bound(n);
  in.deg_c = cn_degree(n).get_si();
  BoundCertificate cert = theorem14_bound(Curve::e0(), in);
  cert.formula_id = "cn-point-height-bound";
  cert.anchor = "rational points of C_n: x_1^n = y_2 in E0^2";
  cert.inputs.insert(cert.inputs.begin(), NamedValue{"n", std::to_string(n), static_cast<double>(n)});
  const double headline = cn_headline_point_bound(n);
  cert.intermediates.push_back({"headline 8.253e38 (n+1)^3", "", headline});
  cert.intermediates.push_back({"ratio to headline", "", cert.value / headline});
  cert.comparisons.push_back(compare_le("bound <= 8.253e38 (n+1)^3", cert.value, headline));
  return cert;
}

double CnCoefficientBounds::b_bound(double a) const {
  return std::sqrt(b_quadratic.get_d() * a * a + b_constant.evaluate());
}

CnCoefficientBounds cn_coeff_bounds(int n) {
  require_n(n);
  CnCoefficientBounds out;
  out.n = n;
  // (2n/3 + 1) a^2 h_hat(g) <= h_hat(P) + 2 log 2 + 5n/3.
  const double coeff = 2.0 * n / 3.0 + 1.0;
  const double extra = 2 * std::log(2.0) + 5.0 * n / 3.0;
  auto a_from = [&](double bound, double hg) { return std::sqrt((bound + extra) / (coeff * hg)); };
  out.a_max = a_from(cn_headline_point_bound(n), 0.25);
  const double computed = cn_point_height_bound(n).value;
  out.a_max_computed_bound = a_from(computed, 0.25);
  out.a_max_certified_generator = a_from(computed, generator_height_check().lo);
  out.b_quadratic = mpq_class(3L * n, 2);
  out.b_quadratic.canonicalize();
  out.b_constant = Symbolic(14) * Symbolic::atom(Atom::Log2) + Symbolic(10);
  return out;
}

bool cn_membership(std::int64_t a, std::int64_t b, int n) {
  require_n(n);
  if (a == 0 || b == 0) return false;
  const Point g = e0_generator();
  const Point pa = scalar_mul(a, g);
  const Point pb = scalar_mul(b, g);
  return power(pa.x(), n) == pb.y();
}

std::vector<CnSolution> cn_search(int n, std::int64_t radius, unsigned threads) {
  require_n(n);
  if (radius < 0) fail(ErrorCode::BadParams, "radius must be nonnegative");
  const std::vector<Point> mult = multiples(radius);
  auto at = [&](std::int64_t k) -> const Point& { return mult[static_cast<std::size_t>(k + radius)]; };
  std::map<mpq_class, std::vector<std::int64_t>> by_x;
  for (std::int64_t b = -radius; b <= radius; ++b) {
    if (b != 0) by_x[at(b).x()].push_back(b);
  }
  std::vector<std::int64_t> as;
  for (std::int64_t a = -radius; a <= radius; ++a) {
    if (a != 0) as.push_back(a);
  }
  threads = std::max(1U, threads);
  std::vector<std::vector<CnSolution>> found(threads);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < as.size(); i += threads) {
      const std::int64_t a = as[i];
      const mpq_class t = power(at(a).x(), n);
      mpq_class x;
      if (!solve_x_for_y(t, x)) continue;
      auto it = by_x.find(x);
      if (it == by_x.end()) continue;
      for (std::int64_t b : it->second) {
        if (at(b).y() == t) found[w].push_back({a, b, at(a).x(), t});
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<CnSolution> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end(), solution_order);
  return out;
}

std::vector<CnSolution> cn_brute_force(int n, std::int64_t radius) {
  require_n(n);
  if (radius < 0) fail(ErrorCode::BadParams, "radius must be nonnegative");
  const std::vector<Point> mult = multiples(radius);
  auto at = [&](std::int64_t k) -> const Point& { return mult[static_cast<std::size_t>(k + radius)]; };
  std::vector<CnSolution> out;
  for (std::int64_t a = -radius; a <= radius; ++a) {
    if (a == 0) continue;
    const mpq_class t = power(at(a).x(), n);
    for (std::int64_t b = -radius; b <= radius; ++b) {
      if (b != 0 && at(b).y() == t) out.push_back({a, b, at(a).x(), t});
    }
  }
  return out;
}

HeightInterval generator_height_check() { return neron_tate(e0_generator(), 1e-3); }

CnReport cn_report(int n) {
  CnReport r;
  r.n = n;
  r.degree = cn_degree(n);
  r.genus = cn_genus(n);
  r.essential_min = cn_essential_min_chain(n);
  r.essential_min_upper = r.essential_min.total.evaluate();
  r.curve_height_upper = cn_curve_height_bound(n);
  r.point_bound = cn_point_height_bound(n);
  r.coefficients = cn_coeff_bounds(n);
  return r;
}

}  // namespace ecbounds
