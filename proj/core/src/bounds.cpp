// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/bounds.hpp"

#include <cmath>
#include <string>

#include "ecbounds/constants.hpp"
#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

constexpr double kRelativeSlack = 1e-12;

NamedValue named(std::string name, const Symbolic& s, const Bindings& b) {
  return {std::move(name), s.to_string(), s.evaluate(b)};
}

NamedValue named(std::string name, double v) { return {std::move(name), "", v}; }

NamedValue named(std::string name, const mpz_class& v) {
  return {std::move(name), v.get_str(), v.get_d()};
}

std::string vector_string(const IntVector& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) s += ",";
    s += u[i].get_str();
  }
  return s + ")";
}

Symbolic sym(const mpz_class& z) { return Symbolic(mpq_class(z)); }

void check_rows(const std::vector<IntVector>& u, int n) {
  if (n < 1) fail(ErrorCode::BadParams, "N must be positive");
  if (static_cast<int>(u.size()) > n) fail(ErrorCode::BadParams, "more rows than N");
  for (const auto& row : u) {
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::BadParams, "row length differs from N");
    if (norm_squared(row) == 0) fail(ErrorCode::BadParams, "zero row");
  }
}

Comparison exact_equality(std::string name, const Symbolic& lhs, const Symbolic& rhs,
                          const Bindings& b) {
  Comparison c = compare_le(std::move(name), lhs.evaluate(b), rhs.evaluate(b), kRelativeSlack);
  c.holds = lhs == rhs;
  c.slack = (rhs - lhs).evaluate(b);
  return c;
}

BoundCertificate theorem12_chain(const Curve& curve, int n, const Symbolic& h_v,
                                 const Bindings& b, long deg_v) {
  if (n < 2) fail(ErrorCode::BadParams, "N must be >= 2");
  if (deg_v < 1) fail(ErrorCode::BadParams, "deg V must be >= 1");
  BoundCertificate cert;
  cert.formula_id = "torsion-anomalous-height-bound";
  cert.anchor = "height bound for points of V in rank-one translates of subgroups of E^N";
  cert.inputs = {{"curve", curve.to_string(), 0.0},
                 named("N", mpz_class(n)),
                 {"h(V)", h_v.to_string(), h_v.evaluate(b)},
                 named("deg V", mpz_class(deg_v)),
                 named("hW", b.hw)};
  if (n == 2) {
    cert.value = 0.0;
    cert.exact = "0";
    cert.intermediates.push_back(
        {"note", "for N = 2 the only such points are torsion, of height 0", 0.0});
    return cert;
  }
  const Symbolic deg(deg_v);
  const Symbolic closed = big_c1(n) * h_v * pow(deg, n - 1) + big_c2(n) * pow(deg, n) + big_c3(n);
  const Symbolic t = choose_t(n, deg_v);
  const Symbolic third_n = Symbolic(mpq_class(n, 3));
  const Symbolic bezout = pow(Symbolic(3), n) * Symbolic(mpq_class(1, 2)) * Symbolic::atom(Atom::Log2);
  const Symbolic chain = third_n * c10(n) * t * h_v +
                         third_n * (bezout * c10(n) + c12(n)) * t * deg +
                         Symbolic(n) * c2(n);
  cert.constants = {named("C1(N)", big_c1(n), b), named("C2(E,N)", big_c2(n), b),
                    named("C3(E,N)", big_c3(n), b), named("c2(E,N)", c2(n), b),
                    named("c10(N)", c10(n), b),     named("c11(N)", c11(n), b),
                    named("c12(E,N)", c12(n), b)};
  cert.intermediates = {named("T", t, b), named("closed form", closed, b),
                        named("proof chain", chain, b), named("chain - closed", chain - closed, b)};
  cert.value = closed.evaluate(b);
  cert.exact = closed.to_string();
  cert.comparisons.push_back(exact_equality("proof chain == closed form", chain, closed, b));
  cert.comparisons.push_back(
      compare_le("proof chain <= closed form", chain.evaluate(b), cert.value, kRelativeSlack));
  return cert;
}

}  // namespace

mpq_class d_mult_bound(int m) {
  if (m < 1) fail(ErrorCode::BadParams, "m must be positive");
  return mpq_class(3, 2) * (mpq_class(m) * m + 1);
}

mpq_class d_sum_bound(const std::vector<mpq_class>& d) {
  if (d.empty()) fail(ErrorCode::BadParams, "need at least one degree");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 12, d.size() - 1);
  mpq_class s = 0;
  for (const auto& x : d) s += x;
  return mpq_class(p) * s;
}

mpq_class d_linear_bound(const std::vector<std::int64_t>& l) {
  if (l.empty()) fail(ErrorCode::BadParams, "need at least one coefficient");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 12, l.size() - 1);
  mpz_class s = static_cast<long>(l.size());
  for (auto x : l) s += mpz_class(static_cast<long>(x)) * static_cast<long>(x);
  return mpq_class(3, 2) * mpq_class(p * s);
}

BoundCertificate translate_degree_bound(const std::vector<IntVector>& u, int n) {
  check_rows(u, n);
  const int s = static_cast<int>(u.size());
  mpz_class prod = 1;
  mpz_class padded = 1;
  for (const auto& row : u) {
    prod *= norm_squared(row);
    padded *= norm_squared(row) + n;
  }
  const Symbolic value = c4(n, s) * sym(prod);
  const Symbolic before = c1(n) * pow(Symbolic(mpq_class(3, 2)) * pow(Symbolic(12), n - 1), s) *
                          sym(padded);
  BoundCertificate cert;
  cert.formula_id = "translate-degree-bound";
  cert.anchor = "degree of a translate of the subgroup cut out by integer rows";
  cert.inputs.push_back(named("N", mpz_class(n)));
  cert.inputs.push_back(named("s", mpz_class(s)));
  for (int i = 0; i < s; ++i) cert.inputs.push_back({"u" + std::to_string(i + 1), vector_string(u[i]), 0.0});
  cert.constants = {named("c1(N)", c1(n), {}), named("c4(N,s)", c4(n, s), {})};
  cert.intermediates = {named("prod |u_i|^2", prod),
                        named("c1 ((3/2) 12^(N-1))^s prod (|u_i|^2 + N)", before, {})};
  cert.value = value.evaluate();
  cert.exact = value.to_string();
  cert.comparisons.push_back(
      compare_le("rowwise bound <= c4(N,s) prod |u_i|^2", before.evaluate(), cert.value));
  return cert;
}

BoundCertificate translate_height_bound(const std::vector<IntVector>& u,
                                        const std::vector<HeightInterval>& heights,
                                        const Curve& curve, int n) {
  check_rows(u, n);
  const int s = static_cast<int>(u.size());
  if (s < 1) fail(ErrorCode::BadParams, "need at least one row");
  if (heights.size() != u.size()) fail(ErrorCode::BadParams, "one height per row required");
  const Bindings b{hw(curve).hi, 0.0};
  mpz_class prod = 1;
  for (const auto& row : u) prod *= norm_squared(row);
  double weighted = 0.0;
  for (int i = 0; i < s; ++i) {
    if (heights[i].hi < 0) fail(ErrorCode::BadParams, "negative height");
    weighted += heights[i].hi / norm_squared(u[i]).get_d();
  }
  const Symbolic lead = Symbolic(3L * n * (n - s + 1)) * pow(Symbolic(4), n) *
                        pow(omega_ball(n - s) * omega_ball(s), -2) * c4(n, s) * sym(prod);
  const Symbolic torsion_part = c6(n, s) * sym(prod);
  BoundCertificate cert;
  cert.formula_id = "translate-height-bound";
  cert.anchor = "height of a translate H + P by the heights of u_i(P)";
  cert.inputs = {{"curve", curve.to_string(), 0.0}, named("N", mpz_class(n)),
                 named("s", mpz_class(s)), named("hW", b.hw)};
  for (int i = 0; i < s; ++i) {
    cert.inputs.push_back({"u" + std::to_string(i + 1), vector_string(u[i]), 0.0});
    cert.inputs.push_back(named("h_hat(u" + std::to_string(i + 1) + "(P)) upper", heights[i].hi));
  }
  cert.constants = {named("c4(N,s)", c4(n, s), b), named("c6(E,N,s)", c6(n, s), b)};
  cert.intermediates = {named("prod |u_i|^2", prod),
                        named("sum h_hat(u_i(P)) / |u_i|^2", weighted),
                        named("height coefficient", lead, b),
                        named("c6 prod |u_i|^2", torsion_part, b)};
  cert.value = lead.evaluate(b) * weighted + torsion_part.evaluate(b);
  cert.exact = "(" + lead.to_string() + ") * " + format_real(weighted) + " + " +
               torsion_part.to_string();
  return cert;
}

AuxiliarySubgroup auxiliary_subgroup(const PointDecomposition& data, int s, double t,
                                     const AuxiliaryOptions& options) {
  const int n = data.v.rows();
  const int m = data.v.cols();
  if (static_cast<int>(data.points.size()) != n) {
    fail(ErrorCode::BadParams, "need one point per row of v");
  }
  if (!(t >= 1)) fail(ErrorCode::BadParams, "T must be >= 1");
  AuxiliarySubgroup out;
  try {
    out.forms = rank1_linear_forms(data.v, data.gen_heights);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AllTorsion) throw;
    out.forms = zero_forms(n, m);
  }
  out.search = habegger_vectors(out.forms, std::sqrt(t), s, options.search);
  out.h = IntegerMatrix(out.search.vectors);
  const Curve& curve = data.points.front().curve();
  const Bindings b{hw(curve).hi, 0.0};

  out.degree = translate_degree_bound(out.search.vectors, n);
  const double deg_rhs = (c4(n, s) * Symbolic(mpq_class(t))).evaluate(b);
  out.degree.inputs.push_back(named("T", t));
  out.degree.comparisons.push_back(
      compare_le("deg(H+P) bound <= c4(N,s) T", out.degree.value, deg_rhs, kRelativeSlack));

  std::vector<HeightInterval> row_heights;
  for (const auto& u : out.search.vectors) {
    Point q = Point::identity(curve);
    for (int i = 0; i < n; ++i) q = add(q, scalar_mul(u[i], data.points[i]));
    row_heights.push_back(neron_tate(q, options.tol));
  }
  const HeightInterval hp = canonical_height_product(data.points, options.tol);
  out.height = translate_height_bound(out.search.vectors, row_heights, curve, n);
  double lhs_low = 0.0;
  {
    std::vector<HeightInterval> lows = row_heights;
    for (auto& h : lows) h.hi = h.lo;
    lhs_low = translate_height_bound(out.search.vectors, lows, curve, n).value;
  }
  const double exponent = 1.0 - static_cast<double>(n) / (m * s);
  const double c5v = c5(n, m, s).evaluate(b);
  const double c6v = c6(n, s).evaluate(b);
  const double rhs = c5v * std::pow(t, exponent) * hp.hi + c6v * t;
  out.height.inputs.push_back(named("T", t));
  out.height.inputs.push_back(named("h_hat(P) upper", hp.hi));
  out.height.constants.push_back(named("c5(N,m,s)", c5(n, m, s), b));
  out.height.intermediates.push_back(named("bound with lower height ends", lhs_low));
  out.height.intermediates.push_back(named("c5 T^(1-N/(ms)) h_hat(P) + c6 T", rhs));
  out.height.comparisons.push_back(compare_le(
      "h(H+P) bound <= c5 T^(1-N/(ms)) h_hat(P) + c6 T", lhs_low, rhs, kRelativeSlack));
  return out;
}

Symbolic choose_t(int n, long deg_v) {
  if (n < 3) fail(ErrorCode::BadParams, "T is defined for N >= 3");
  if (deg_v < 1) fail(ErrorCode::BadParams, "deg V must be >= 1");
  return pow(Symbolic(mpq_class(n, 3L * (n - 1))) * c11(n) * Symbolic(deg_v), n - 1);
}

BoundCertificate theorem12_bound(const Curve& curve, int n, double h_v, long deg_v) {
  if (!(h_v >= 0)) fail(ErrorCode::BadParams, "h(V) must be nonnegative");
  return theorem12_chain(curve, n, Symbolic::atom(Atom::HV), Bindings{hw(curve).hi, h_v}, deg_v);
}

BoundCertificate theorem14_bound(const Curve& curve, const Theorem14Input& in) {
  const Bindings b{hw(curve).hi, in.h_c_value};
  if (in.deg_c < 1) fail(ErrorCode::BadParams, "deg C must be >= 1");
  if (in.h_c.evaluate(b) < 0) fail(ErrorCode::BadParams, "h(C) must be nonnegative");
  if (in.variant == Theorem14Variant::WeakTransverse) {
    if (in.n < 3) fail(ErrorCode::BadParams, "the weak-transverse bound needs N >= 3");
    BoundCertificate cert = theorem12_chain(curve, in.n, in.h_c, b, in.deg_c);
    cert.formula_id = "rank-one-weak-transverse-bound";
    cert.anchor = "rank <= 1 points on a weak-transverse curve in E^N";
    return cert;
  }
  if (in.epsilon < 0) fail(ErrorCode::BadParams, "epsilon must be nonnegative");
  const Symbolic deg(in.deg_c);
  const Symbolic deg2 = deg * deg;
  const Symbolic deg3 = deg2 * deg;
  const Symbolic closed = d1() * in.h_c * deg2 + d2() * deg3 + d3();
  const Symbolic cubic = big_c2(3) + Symbolic(6) * c2(3) * big_c1(3) + Symbolic(2) * c3(3) * big_c1(3);
  const Symbolic chain = Symbolic(2) * big_c1(3) * in.h_c * deg2 + cubic * deg3 + big_c3(3) +
                         Symbolic(6) * Symbolic(in.epsilon) * big_c1(3) * deg2;

  BoundCertificate cert;
  cert.formula_id = "rank-one-transverse-E2-bound";
  cert.anchor = "rank <= 1 points on a transverse curve in E^2";
  cert.inputs = {{"curve", curve.to_string(), 0.0},
                 {"h(C)", in.h_c.to_string(), in.h_c.evaluate(b)},
                 named("deg C", mpz_class(in.deg_c)),
                 named("hW", b.hw),
                 {"epsilon", in.epsilon.get_str(), in.epsilon.get_d()}};
  cert.constants = {named("D1", d1(), b),           named("D2(E)", d2(), b),
                    named("D3(E)", d3(), b),        named("C1(3)", big_c1(3), b),
                    named("C2(E,3)", big_c2(3), b), named("C3(E,3)", big_c3(3), b),
                    named("c2(E,3)", c2(3), b),     named("c3(E,3)", c3(3), b)};
  cert.intermediates = {named("closed form", closed, b), named("proof chain", chain, b),
                        named("chain deg^3 coefficient", cubic, b),
                        named("chain - closed", chain - closed, b)};
  cert.value = closed.evaluate(b);
  cert.exact = closed.to_string();
  cert.comparisons = {
      exact_equality("D1 == 2 C1(3)", d1(), Symbolic(2) * big_c1(3), b),
      exact_equality("D2 == C2(E,3) + 6 c2 C1(3) + 2 c3 C1(3)", d2(), cubic, b),
      exact_equality("D3 == C3(E,3)", d3(), big_c3(3), b),
  };
  if (in.epsilon == 0) {
    cert.comparisons.push_back(
        compare_le("proof chain <= closed form", chain.evaluate(b), cert.value, kRelativeSlack));
    cert.comparisons.push_back(exact_equality("proof chain == closed form", chain, closed, b));
  } else {
    // For positive epsilon the chain is a valid bound; the closed form is its limit.
    cert.comparisons.push_back(
        compare_le("closed form <= proof chain", cert.value, chain.evaluate(b), kRelativeSlack));
  }
  return cert;
}

}  // namespace ecbounds
