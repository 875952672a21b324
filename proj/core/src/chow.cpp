// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/chow.hpp"

#include <string>

#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

std::size_t power3(int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

}  // namespace

ChowClass::ChowClass(int n) : n_(n) {
  if (n < 1 || n > 12) fail(ErrorCode::BadParams, "Chow ring rank out of range: " + std::to_string(n));
  c_.assign(power3(n), 0);
}

ChowClass ChowClass::linear(const std::vector<mpz_class>& c) {
  ChowClass out(static_cast<int>(c.size()));
  std::size_t place = 1;
  for (const auto& ci : c) {
    out.c_[place] = ci;
    place *= 3;
  }
  return out;
}

ChowClass ChowClass::monomial(const std::vector<int>& exponents, const mpz_class& c) {
  ChowClass out(static_cast<int>(exponents.size()));
  std::size_t idx = 0;
  std::size_t place = 1;
  for (int e : exponents) {
    if (e < 0) fail(ErrorCode::BadParams, "negative exponent");
    if (e >= 3) return out;
    idx += static_cast<std::size_t>(e) * place;
    place *= 3;
  }
  out.c_[idx] = c;
  return out;
}

mpz_class ChowClass::coefficient(const std::vector<int>& exponents) const {
  if (static_cast<int>(exponents.size()) != n_) fail(ErrorCode::BadParams, "wrong number of exponents");
  std::size_t idx = 0;
  std::size_t place = 1;
  for (int e : exponents) {
    if (e < 0 || e >= 3) return 0;
    idx += static_cast<std::size_t>(e) * place;
    place *= 3;
  }
  return c_[idx];
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  if (o.n_ != n_) fail(ErrorCode::BadParams, "Chow classes of different rings");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  if (a.n_ != b.n_) fail(ErrorCode::BadParams, "Chow classes of different rings");
  ChowClass out(a.n_);
  const std::size_t size = a.c_.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < size; ++j) {
      if (b.c_[j] == 0) continue;
      // Digit-wise sum in base 3; any digit reaching 3 kills the monomial.
      std::size_t k = 0, place = 1, x = i, y = j;
      bool alive = true;
      for (int d = 0; d < a.n_; ++d) {
        const std::size_t e = x % 3 + y % 3;
        if (e >= 3) {
          alive = false;
          break;
        }
        k += e * place;
        place *= 3;
        x /= 3;
        y /= 3;
      }
      if (alive) out.c_[k] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

mpz_class chow_product(const std::vector<ChowClass>& classes) {
  if (classes.empty()) fail(ErrorCode::BadParams, "empty Chow product");
  ChowClass acc = classes.front();
  for (std::size_t i = 1; i < classes.size(); ++i) acc = acc * classes[i];
  return acc.top();
}

mpz_class segre_degree(int n) {
  std::vector<ChowClass> factors;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    factors.push_back(ChowClass::monomial(e, 3));
  }
  const ChowClass hyperplane = ChowClass::linear(std::vector<mpz_class>(n, 1));
  for (int i = 0; i < n; ++i) factors.push_back(hyperplane);
  return chow_product(factors);
}

}  // namespace ecbounds
