// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ecbounds/interval.hpp"

namespace ecbounds {

/// Transcendental atoms an exact constant may carry.
enum class Atom { Pi = 0, Log2 = 1, Log3 = 2, HW = 3, HV = 4 };

/// Numeric values substituted for the curve- and variety-dependent atoms.
struct Bindings {
  double hw = 0.0;
  double hv = 0.0;
};

/// Finite sum of rational multiples of monomials in pi^(+-1), log 2, log 3,
/// h_W and h(V). Closed under +, -, * and powers, which is all the explicit
/// constants need; identities between them are decided exactly.
class Symbolic {
 public:
  using Exponents = std::array<int, 5>;

  Symbolic() = default;
  Symbolic(const mpq_class& q);  // NOLINT: rationals embed implicitly
  Symbolic(long q) : Symbolic(mpq_class(q)) {}  // NOLINT
  static Symbolic atom(Atom a, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, mpq_class>& terms() const { return terms_; }

  /// (q, k) when the value is q * pi^k with no other atoms.
  std::optional<std::pair<mpq_class, int>> as_rational_pi_power() const;
  /// Rational coefficient of the monomial with the given exponents.
  mpq_class coefficient(const Exponents& e) const;

  Symbolic& operator+=(const Symbolic& o);
  Symbolic& operator-=(const Symbolic& o);
  Symbolic& operator*=(const Symbolic& o);
  friend Symbolic operator+(Symbolic a, const Symbolic& b) { return a += b; }
  friend Symbolic operator-(Symbolic a, const Symbolic& b) { return a -= b; }
  friend Symbolic operator*(Symbolic a, const Symbolic& b) { return a *= b; }
  Symbolic operator-() const;
  friend bool operator==(const Symbolic& a, const Symbolic& b) { return a.terms_ == b.terms_; }

  /// Inverse of a single monomial term; BadParams otherwise.
  Symbolic inverse() const;

  /// Evaluated with 256-bit MPFR arithmetic, rounded once to double.
  double evaluate(const Bindings& b = {}) const;
  /// Enclosure of evaluate(): one ulp outward on each side.
  Interval enclose(const Bindings& b = {}) const;

  /// "2^64 * 3^40 * pi^-8"; coefficients factor over small primes when that is shorter.
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const mpq_class& c);
  std::map<Exponents, mpq_class> terms_;
};

/// Negative exponents are allowed for a single monomial only.
Symbolic pow(const Symbolic& base, int exponent);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

}  // namespace ecbounds
