// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <vector>

namespace ecbounds {

/// Element of Z[l_1, ..., l_N] / (l_i^3), the Chow ring of (P_2)^N. Coefficients
/// are indexed by multidegrees in {0,1,2}^N, encoded in base 3 with l_1 lowest.
class ChowClass {
 public:
  explicit ChowClass(int n);
  /// sum_i c_i l_i.
  static ChowClass linear(const std::vector<mpz_class>& c);
  /// c * l_1^e_1 ... l_N^e_N (zero when some e_i >= 3).
  static ChowClass monomial(const std::vector<int>& exponents, const mpz_class& c = 1);

  int n() const { return n_; }
  mpz_class coefficient(const std::vector<int>& exponents) const;
  /// Coefficient of (l_1 ... l_N)^2.
  const mpz_class& top() const { return c_.back(); }

  ChowClass& operator+=(const ChowClass& o);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);

 private:
  int n_;
  std::vector<mpz_class> c_;
};

/// Top-degree coefficient of the product of the given classes.
mpz_class chow_product(const std::vector<ChowClass>& classes);

/// Degree of E^N embedded in (P_2)^N and then by Segre:
/// (3 l_1)...(3 l_N)(l_1 + ... + l_N)^N.
mpz_class segre_degree(int n);

}  // namespace ecbounds
