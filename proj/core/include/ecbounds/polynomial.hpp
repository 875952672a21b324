// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace ecbounds {

/// Dense univariate polynomial in x with integer coefficients; coefficient i
/// multiplies x^i. Always trimmed, so the zero polynomial has no coefficients.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs);
  static ZPoly constant(const mpz_class& c);
  static ZPoly monomial(const mpz_class& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return c_; }
  const mpz_class& leading() const { return c_.back(); }
  mpz_class coeff(int i) const;

  mpq_class evaluate(const mpq_class& x) const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const mpz_class& s);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  /// Exact division of every coefficient; throws BadParams if not divisible.
  ZPoly divided_exactly(const mpz_class& d) const;

  /// Canonical sparse form, descending degree: "3*x^4 + 6*x^2 - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Schoolbook product; the reference path the Kronecker product is checked against.
ZPoly multiply_schoolbook(const ZPoly& a, const ZPoly& b);
/// Kronecker-substitution product through a single big-integer multiply.
ZPoly multiply_kronecker(const ZPoly& a, const ZPoly& b);

/// Sparse polynomial in A, B, x with integer coefficients.
class ABXPoly {
 public:
  /// Exponents of (A, B, x).
  using Exponents = std::array<int, 3>;

  ABXPoly() = default;
  static ABXPoly constant(const mpz_class& c);
  static ABXPoly var_a();
  static ABXPoly var_b();
  static ABXPoly var_x();

  bool is_zero() const { return terms_.empty(); }
  /// Degree in x alone (A and B count as constants); -1 for zero.
  int x_degree() const;
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }
  /// Coefficient of x^k as a polynomial in A, B.
  ABXPoly x_coefficient(int k) const;

  ABXPoly& operator+=(const ABXPoly& o);
  ABXPoly& operator-=(const ABXPoly& o);
  ABXPoly& operator*=(const mpz_class& s);
  friend ABXPoly operator+(ABXPoly a, const ABXPoly& b) { return a += b; }
  friend ABXPoly operator-(ABXPoly a, const ABXPoly& b) { return a -= b; }
  friend ABXPoly operator*(const ABXPoly& a, const ABXPoly& b);
  friend ABXPoly operator*(ABXPoly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const ABXPoly& a, const ABXPoly& b) { return a.terms_ == b.terms_; }

  ABXPoly divided_exactly(const mpz_class& d) const;
  /// Substitute integer values for A and B.
  ZPoly specialize(const mpz_class& a, const mpz_class& b) const;

  /// Canonical order: descending x-degree, then descending A, then B.
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const mpz_class& c);
  std::map<Exponents, mpz_class> terms_;
};

}  // namespace ecbounds
