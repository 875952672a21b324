// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/symbolic.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>
#include <vector>

#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

constexpr mpfr_prec_t kPrecision = 256;

class Real {
 public:
  Real() { mpfr_init2(v_, kPrecision); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void multiply_power(mpfr_ptr acc, mpfr_ptr base, int e) {
  if (e == 0) return;
  Real p;
  mpfr_pow_si(p.get(), base, e, MPFR_RNDN);
  mpfr_mul(acc, acc, p.get(), MPFR_RNDN);
}

const char* const kAtomNames[5] = {"pi", "log(2)", "log(3)", "hW", "hV"};

std::vector<std::pair<unsigned long, int>> small_factors(mpz_class n, bool& smooth) {
  std::vector<std::pair<unsigned long, int>> out;
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    bool prime = true;
    for (unsigned long d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  smooth = n == 1;
  return out;
}

std::string format_coefficient(const mpq_class& q) {
  const mpz_class num = abs(q.get_num());
  const mpz_class& den = q.get_den();
  const mpz_class threshold = 1000000;
  if (num < threshold && den < threshold) {
    return num.get_str() + (den == 1 ? "" : "/" + den.get_str());
  }
  bool num_smooth = false;
  bool den_smooth = false;
  auto nf = small_factors(num, num_smooth);
  auto df = small_factors(den, den_smooth);
  if (!num_smooth || !den_smooth) {
    return num.get_str() + (den == 1 ? "" : "/" + den.get_str());
  }
  std::map<unsigned long, int> exps;
  for (auto [p, e] : nf) exps[p] += e;
  for (auto [p, e] : df) exps[p] -= e;
  std::string s;
  for (auto [p, e] : exps) {
    if (!s.empty()) s += " * ";
    s += std::to_string(p);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

Symbolic::Symbolic(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c != 0) terms_[Exponents{}] = c;
}

Symbolic Symbolic::atom(Atom a, int power) {
  Symbolic s;
  Exponents e{};
  e[static_cast<int>(a)] = power;
  s.terms_[e] = 1;
  return s;
}

void Symbolic::add_term(const Exponents& e, const mpq_class& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::optional<std::pair<mpq_class, int>> Symbolic::as_rational_pi_power() const {
  if (terms_.empty()) return std::make_pair(mpq_class(0), 0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  for (int i = 1; i < 5; ++i) {
    if (e[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return std::make_pair(c, e[0]);
}

mpq_class Symbolic::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

Symbolic& Symbolic::operator+=(const Symbolic& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Symbolic& Symbolic::operator-=(const Symbolic& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Symbolic& Symbolic::operator*=(const Symbolic& o) {
  Symbolic out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Symbolic Symbolic::operator-() const {
  Symbolic out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Symbolic Symbolic::inverse() const {
  if (terms_.size() != 1) fail(ErrorCode::BadParams, "only a single monomial can be inverted");
  const auto& [e, c] = *terms_.begin();
  Exponents inv;
  for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  Symbolic out;
  out.terms_.emplace(inv, 1 / c);
  return out;
}

double Symbolic::evaluate(const Bindings& b) const {
  Real pi, l2, l3, hw, hv, sum, term;
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_set_ui(l2.get(), 2, MPFR_RNDN);
  mpfr_log(l2.get(), l2.get(), MPFR_RNDN);
  mpfr_set_ui(l3.get(), 3, MPFR_RNDN);
  mpfr_log(l3.get(), l3.get(), MPFR_RNDN);
  mpfr_set_d(hw.get(), b.hw, MPFR_RNDN);
  mpfr_set_d(hv.get(), b.hv, MPFR_RNDN);
  mpfr_ptr atoms[5] = {pi.get(), l2.get(), l3.get(), hw.get(), hv.get()};
  mpfr_set_zero(sum.get(), 1);
  for (const auto& [e, c] : terms_) {
    mpfr_set_q(term.get(), c.get_mpq_t(), MPFR_RNDN);
    for (std::size_t i = 0; i < e.size(); ++i) multiply_power(term.get(), atoms[i], e[i]);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  return mpfr_get_d(sum.get(), MPFR_RNDN);
}

Interval Symbolic::enclose(const Bindings& b) const {
  const double v = evaluate(b);
  const double inf = std::numeric_limits<double>::infinity();
  return {std::nextafter(v, -inf), std::nextafter(v, inf)};
}

std::string Symbolic::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string body;
    const bool unit = abs(c) == 1;
    bool any_atom = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += " * ";
      body += kAtomNames[i];
      if (e[i] != 1) body += "^" + std::to_string(e[i]);
      any_atom = true;
    }
    if (!unit || !any_atom) {
      const std::string coeff = format_coefficient(c);
      body = any_atom ? coeff + " * " + body : coeff;
    }
    s += body;
  }
  return s;
}

Symbolic pow(const Symbolic& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Symbolic result(1);
  Symbolic b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace ecbounds
