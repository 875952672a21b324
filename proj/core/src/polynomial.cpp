// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

constexpr std::size_t kKroneckerThreshold = 24;

std::size_t max_bits(const std::vector<mpz_class>& c) {
  std::size_t bits = 0;
  for (const auto& v : c) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
  return bits;
}

// Sum of c[lo..hi) * 2^(k*(i-lo)), split recursively so each shift is paid once per level.
mpz_class pack(const std::vector<mpz_class>& c, std::size_t lo, std::size_t hi, mp_bitcnt_t k) {
  if (hi - lo == 1) return c[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  mpz_class high = pack(c, mid, hi, k);
  mpz_class low = pack(c, lo, mid, k);
  mpz_mul_2exp(high.get_mpz_t(), high.get_mpz_t(), k * (mid - lo));
  return high + low;
}

// Inverse of pack for balanced digits |c_i| < 2^(k-2).
void unpack(mpz_class v, std::vector<mpz_class>& out, std::size_t lo, std::size_t hi,
            mp_bitcnt_t k) {
  if (hi - lo == 1) {
    out[lo] = std::move(v);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const mp_bitcnt_t shift = k * (mid - lo);
  mpz_class low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), v.get_mpz_t(), shift);
  if (mpz_tstbit(low.get_mpz_t(), shift - 1)) {
    mpz_class m;
    mpz_setbit(m.get_mpz_t(), shift);
    low -= m;
  }
  v -= low;
  mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), shift);
  unpack(std::move(low), out, lo, mid, k);
  unpack(std::move(v), out, mid, hi, k);
}

std::string signed_term(bool first, const mpz_class& c, const std::string& mono) {
  std::string out;
  mpz_class mag = c;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag < 0) mag = -mag;
  if (mono.empty()) return out + mag.get_str();
  if (mag != 1) out += mag.get_str() + "*";
  return out + mono;
}

}  // namespace

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const mpz_class& c) { return ZPoly({c}); }

ZPoly ZPoly::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class ZPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

mpq_class ZPoly::evaluate(const mpq_class& x) const {
  if (c_.empty()) return 0;
  // Homogeneous Horner on numerator and denominator, one division at the end.
  const mpz_class& p = x.get_num();
  const mpz_class& q = x.get_den();
  mpz_class acc = c_.back();
  mpz_class qpow = 1;
  for (auto i = c_.size() - 1; i-- > 0;) {
    qpow *= q;
    acc = acc * p + c_[i] * qpow;
  }
  mpq_class out(acc, qpow);
  out.canonicalize();
  return out;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const mpz_class& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

ZPoly multiply_schoolbook(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<mpz_class> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return ZPoly(std::move(out));
}

ZPoly multiply_kronecker(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  const std::size_t terms = std::min(x.size(), y.size());
  std::size_t log_terms = 0;
  while ((std::size_t{1} << log_terms) < terms) ++log_terms;
  const mp_bitcnt_t k = max_bits(x) + max_bits(y) + log_terms + 3;
  const mpz_class product = pack(x, 0, x.size(), k) * pack(y, 0, y.size(), k);
  std::vector<mpz_class> out(x.size() + y.size() - 1);
  unpack(product, out, 0, out.size(), k);
  return ZPoly(std::move(out));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (std::min(a.c_.size(), b.c_.size()) < kKroneckerThreshold) return multiply_schoolbook(a, b);
  return multiply_kronecker(a, b);
}

ZPoly ZPoly::divided_exactly(const mpz_class& d) const {
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!mpz_divisible_p(c_[i].get_mpz_t(), d.get_mpz_t())) {
      fail(ErrorCode::BadParams, "coefficient not divisible by " + d.get_str());
    }
    mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), d.get_mpz_t());
  }
  return ZPoly(std::move(out));
}

std::string ZPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    out += signed_term(first, c_[i], mono);
    first = false;
  }
  return out;
}

ABXPoly ABXPoly::constant(const mpz_class& c) {
  ABXPoly p;
  p.add_term({0, 0, 0}, c);
  return p;
}
ABXPoly ABXPoly::var_a() {
  ABXPoly p;
  p.add_term({1, 0, 0}, 1);
  return p;
}
ABXPoly ABXPoly::var_b() {
  ABXPoly p;
  p.add_term({0, 1, 0}, 1);
  return p;
}
ABXPoly ABXPoly::var_x() {
  ABXPoly p;
  p.add_term({0, 0, 1}, 1);
  return p;
}

void ABXPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int ABXPoly::x_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[2]);
  return d;
}

ABXPoly ABXPoly::x_coefficient(int k) const {
  ABXPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[2] == k) out.add_term({e[0], e[1], 0}, c);
  }
  return out;
}

ABXPoly& ABXPoly::operator+=(const ABXPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ABXPoly& ABXPoly::operator-=(const ABXPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ABXPoly& ABXPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

ABXPoly operator*(const ABXPoly& a, const ABXPoly& b) {
  ABXPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return out;
}

ABXPoly ABXPoly::divided_exactly(const mpz_class& d) const {
  ABXPoly out;
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      fail(ErrorCode::BadParams, "coefficient not divisible by " + d.get_str());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    out.terms_.emplace(e, q);
  }
  return out;
}

ZPoly ABXPoly::specialize(const mpz_class& a, const mpz_class& b) const {
  const int d = x_degree();
  if (d < 0) return {};
  std::vector<mpz_class> out(static_cast<std::size_t>(d) + 1);
  for (const auto& [e, c] : terms_) {
    mpz_class pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e[0]));
    mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e[1]));
    out[static_cast<std::size_t>(e[2])] += c * pa * pb;
  }
  return ZPoly(std::move(out));
}

std::string ABXPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, mpz_class>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    const auto& a = l.first;
    const auto& b = r.first;
    if (a[2] != b[2]) return a[2] > b[2];
    if (a[0] != b[0]) return a[0] > b[0];
    return a[1] > b[1];
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    std::string mono;
    auto append = [&mono](const char* var, int p) {
      if (p == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (p > 1) mono += "^" + std::to_string(p);
    };
    append("A", e[0]);
    append("B", e[1]);
    append("x", e[2]);
    out += signed_term(first, c, mono);
    first = false;
  }
  return out;
}

}  // namespace ecbounds
