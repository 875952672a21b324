// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ecbounds/lattice.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "ecbounds/constants.hpp"
#include "ecbounds/error.hpp"

namespace ecbounds {
namespace {

mpz_class round_nearest(const mpq_class& q) {
  mpq_class shifted = q + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return r;
}

// Fraction-free row echelon form of a copy; returns the rank.
int echelon_rank(std::vector<IntVector> m, int cols) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[rank], m[p]);
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const mpz_class f = m[i][c];
      const mpz_class g = m[rank][c];
      for (int j = c; j < cols; ++j) m[i][j] = g * m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Incremental independence test over Q, kept fraction-free.
class IndependenceTracker {
 public:
  explicit IndependenceTracker(int dim) : dim_(dim) {}

  bool try_add(const IntVector& v) {
    IntVector w = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      if (w[p] == 0) continue;
      const mpz_class f = w[p];
      const mpz_class g = rows_[r][p];
      for (int j = 0; j < dim_; ++j) w[j] = g * w[j] - f * rows_[r][j];
    }
    int p = 0;
    while (p < dim_ && w[p] == 0) ++p;
    if (p == dim_) return false;
    mpz_class c = 0;
    for (const auto& x : w) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  int dim_;
  std::vector<IntVector> rows_;
  std::vector<int> pivots_;
};

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    return;
  }
}

struct BallVector {
  mpz_class norm_sq;
  IntVector v;
};

bool ball_order(const BallVector& a, const BallVector& b) {
  if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
  return a.v < b.v;
}

// Every nonzero lattice vector (one per sign pair) with |v|^2 <= radius_sq,
// sorted by (norm^2, lexicographic). Fincke-Pohst over a reduced basis.
std::vector<BallVector> enumerate_ball(const IntegerMatrix& basis, const mpz_class& radius_sq,
                                       const EnumerationBudget& budget, std::uint64_t& nodes) {
  const int r = basis.rows();
  const int n = basis.cols();
  std::vector<std::vector<long double>> q(r, std::vector<long double>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) q[i][j] = dot(basis.row(i), basis.row(j)).get_d();
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (int k = i + 1; k < r; ++k) {
      for (int l = k; l < r; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
  }
  const long double bound = radius_sq.get_d() * (1 + 1e-9L) + 1e-6L;
  std::vector<long> x(r, 0);
  std::vector<BallVector> out;

  std::function<void(int, long double)> descend = [&](int i, long double remaining) {
    if (++nodes > budget.max_nodes) {
      fail(ErrorCode::BudgetExceeded,
           "lattice enumeration exceeded " + std::to_string(budget.max_nodes) + " nodes");
    }
    long double center = 0;
    for (int j = i + 1; j < r; ++j) center -= q[i][j] * x[j];
    const long double width = std::sqrt(std::max(remaining, 0.0L) / q[i][i]);
    const long lo = static_cast<long>(std::ceil(center - width - 1e-9L));
    const long hi = static_cast<long>(std::floor(center + width + 1e-9L));
    for (long xi = lo; xi <= hi; ++xi) {
      x[i] = xi;
      const long double t = xi - center;
      const long double rest = remaining - q[i][i] * t * t;
      if (rest < -1e-6L * bound) continue;
      if (i > 0) {
        descend(i - 1, rest);
        continue;
      }
      int top = r - 1;
      while (top >= 0 && x[top] == 0) --top;
      if (top < 0 || x[top] < 0) continue;  // zero, or the negative of a vector kept elsewhere
      IntVector v(n, 0);
      for (int k = 0; k < r; ++k) {
        if (x[k] == 0) continue;
        for (int j = 0; j < n; ++j) v[j] += x[k] * basis(k, j);
      }
      mpz_class ns = norm_squared(v);
      if (ns > radius_sq) continue;
      normalize_sign(v);
      out.push_back({std::move(ns), std::move(v)});
    }
    x[i] = 0;
  };
  descend(r - 1, bound);
  std::sort(out.begin(), out.end(), ball_order);
  return out;
}

mpz_class max_row_norm(const IntegerMatrix& m) {
  mpz_class best = 0;
  for (const auto& row : m.row_vectors()) best = std::max(best, norm_squared(row));
  return best;
}

}  // namespace

mpz_class dot(const IntVector& a, const IntVector& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

mpz_class norm_squared(const IntVector& v) { return dot(v, v); }

IntVector to_int_vector(const std::vector<std::int64_t>& v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : cols_(cols), rows_(static_cast<std::size_t>(rows), IntVector(cols, 0)) {}

IntegerMatrix::IntegerMatrix(std::vector<IntVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : static_cast<int>(rows_.front().size());
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != cols_) fail(ErrorCode::BadParams, "ragged matrix rows");
  }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<IntVector> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.push_back(to_int_vector(row));
  return IntegerMatrix(std::move(r));
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

int IntegerMatrix::rank() const { return echelon_rank(rows_, cols_); }

mpz_class IntegerMatrix::determinant() const {
  if (rows() != cols()) fail(ErrorCode::NotSquare, "determinant of a non-square matrix");
  return bareiss_determinant(rows_);
}

IntegerMatrix IntegerMatrix::gram() const {
  IntegerMatrix g(rows(), rows());
  for (int i = 0; i < rows(); ++i) {
    for (int j = i; j < rows(); ++j) g(i, j) = g(j, i) = dot(rows_[i], rows_[j]);
  }
  return g;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols(), rows());
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) t(j, i) = rows_[i][j];
  }
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::BadParams, "matrix shapes do not match");
  IntegerMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

std::string IntegerMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < rows(); ++i) {
    if (i > 0) s += ",";
    s += "[";
    for (int j = 0; j < cols(); ++j) {
      if (j > 0) s += ",";
      s += rows_[i][j].get_str();
    }
    s += "]";
  }
  return s + "]";
}

mpz_class bareiss_determinant(std::vector<IntVector> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntegerLattice::IntegerLattice(IntegerMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() == 0 || basis_.cols() == 0) fail(ErrorCode::BadParams, "empty lattice basis");
  det_sq_ = basis_.gram().determinant();
  if (det_sq_ == 0) fail(ErrorCode::BadParams, "lattice basis rows are dependent");
}

std::vector<double> SuccessiveMinima::minima() const {
  std::vector<double> out;
  out.reserve(norms_squared.size());
  for (const auto& n : norms_squared) out.push_back(std::sqrt(n.get_d()));
  return out;
}

IntegerMatrix lll_reduce(const IntegerMatrix& basis) {
  std::vector<IntVector> b = basis.row_vectors();
  const int n = static_cast<int>(b.size());
  if (n <= 1) return basis;
  const mpq_class delta(3, 4);
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> bstar_sq(n);

  auto gso = [&]() {
    std::vector<std::vector<mpq_class>> bstar(n);
    for (int i = 0; i < n; ++i) {
      bstar[i].assign(b[i].begin(), b[i].end());
      for (int j = 0; j < i; ++j) {
        mpq_class d = 0;
        for (std::size_t k = 0; k < b[i].size(); ++k) d += b[i][k] * bstar[j][k];
        mu[i][j] = d / bstar_sq[j];
        for (std::size_t k = 0; k < b[i].size(); ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
      }
      bstar_sq[i] = 0;
      for (const auto& x : bstar[i]) bstar_sq[i] += x * x;
    }
  };

  gso();
  int k = 1;
  while (k < n) {
    for (int j = k - 1; j >= 0; --j) {
      const mpz_class q = round_nearest(mu[k][j]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[j][c];
      gso();
    }
    if (bstar_sq[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar_sq[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gso();
      k = std::max(k - 1, 1);
    }
  }
  return IntegerMatrix(std::move(b));
}

SuccessiveMinima successive_minima(const IntegerLattice& lattice, const EnumerationBudget& budget) {
  const IntegerMatrix reduced = lll_reduce(lattice.basis());
  SuccessiveMinima out;
  const auto ball = enumerate_ball(reduced, max_row_norm(reduced), budget, out.nodes);
  IndependenceTracker tracker(lattice.ambient_dimension());
  for (const auto& bv : ball) {
    if (!tracker.try_add(bv.v)) continue;
    out.norms_squared.push_back(bv.norm_sq);
    out.vectors.push_back(bv.v);
    if (static_cast<int>(tracker.size()) == lattice.rank()) break;
  }
  if (static_cast<int>(out.vectors.size()) != lattice.rank()) {
    fail(ErrorCode::CertificateViolation, "enumeration ball did not contain a full set of minima");
  }
  return out;
}

double det_lattice(const IntegerLattice& lattice) { return std::sqrt(lattice.det_squared().get_d()); }

OrthogonalLattice orthogonal_lattice(const IntegerLattice& lattice,
                                     const EnumerationBudget& budget) {
  const int r = lattice.rank();
  const int n = lattice.ambient_dimension();
  if (r >= n) fail(ErrorCode::BadParams, "orthogonal lattice needs rank < ambient dimension");

  // Rows of [M^t | I]; unimodular row operations clear the M^t block.
  std::vector<IntVector> a(n, IntVector(r + n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = lattice.basis()(j, i);
    a[i][r + i] = 1;
  }
  int top = 0;
  for (int c = 0; c < r; ++c) {
    while (true) {
      int p = -1;
      for (int i = top; i < n; ++i) {
        if (a[i][c] != 0 && (p < 0 || abs(a[i][c]) < abs(a[p][c]))) p = i;
      }
      if (p < 0) break;
      std::swap(a[top], a[p]);
      bool done = true;
      for (int i = top + 1; i < n; ++i) {
        if (a[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[top][c].get_mpz_t());
        for (int j = 0; j < r + n; ++j) a[i][j] -= q * a[top][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) {
        ++top;
        break;
      }
    }
  }
  std::vector<IntVector> kernel;
  for (int i = top; i < n; ++i) kernel.emplace_back(a[i].begin() + r, a[i].end());
  const IntegerLattice raw(lll_reduce(IntegerMatrix(std::move(kernel))));

  const SuccessiveMinima sm = successive_minima(raw, budget);
  const IntegerLattice candidate{IntegerMatrix(sm.vectors)};
  if (candidate.det_squared() == raw.det_squared()) return {candidate, true};

  // The greedy minima vectors span a proper sublattice; look for another
  // choice of minimal vectors that is a basis.
  std::uint64_t nodes = 0;
  const auto ball = enumerate_ball(raw.basis(), sm.norms_squared.back(), budget, nodes);
  const int k = raw.rank();
  std::vector<IntVector> chosen;
  std::function<bool(int)> search = [&](int i) -> bool {
    if (i == k) return IntegerMatrix(chosen).gram().determinant() == raw.det_squared();
    for (const auto& bv : ball) {
      if (bv.norm_sq != sm.norms_squared[i]) continue;
      if (++nodes > budget.max_nodes) return false;
      chosen.push_back(bv.v);
      if (IntegerMatrix(chosen).gram().determinant() != 0 && search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(0)) return {IntegerLattice(IntegerMatrix(chosen)), true};
  return {raw, false};
}

IntegerMatrix adjugate(const IntegerMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) fail(ErrorCode::NotSquare, "adjugate of a non-square matrix");
  IntegerMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<IntVector> minor;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        IntVector row;
        for (int c = 0; c < n; ++c) {
          if (c != j) row.push_back(m(r, c));
        }
        minor.push_back(std::move(row));
      }
      const mpz_class cof = bareiss_determinant(std::move(minor));
      adj(j, i) = (i + j) % 2 == 0 ? cof : mpz_class(-cof);
    }
  }
  return adj;
}

bool adjugate_column_bound_holds(const IntegerMatrix& m, const IntegerMatrix& adj) {
  const int n = m.rows();
  for (int i = 0; i < n; ++i) {
    mpz_class bound = 1;
    for (int l = 0; l < n; ++l) {
      if (l != i) bound *= norm_squared(m.row(l));
    }
    for (int k = 0; k < n; ++k) {
      if (adj(k, i) * adj(k, i) > bound) return false;
    }
  }
  return true;
}

namespace {

// "c * sqrt(n)" with square factors of n over small primes moved into c.
std::string times_sqrt(const Symbolic& c, mpz_class n) {
  mpz_class outside = 1;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(outside.get_mpz_t(), n.get_mpz_t());
    n = 1;
  }
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    const mpz_class sq = p * p;
    while (mpz_divisible_p(n.get_mpz_t(), sq.get_mpz_t())) {
      n /= sq;
      outside *= p;
    }
  }
  const Symbolic coefficient = c * Symbolic(mpq_class(outside));
  if (n == 1) return coefficient.to_string();
  return coefficient.to_string() + " * sqrt(" + n.get_str() + ")";
}

}  // namespace

MinkowskiCertificate minkowski_certificate(const IntegerLattice& lattice,
                                           const EnumerationBudget& budget) {
  const int r = lattice.rank();
  const SuccessiveMinima sm = successive_minima(lattice, budget);
  mpz_class prod = 1;
  for (const auto& v : sm.norms_squared) prod *= v;
  const mpz_class& d = lattice.det_squared();
  mpz_class two_r;
  mpz_ui_pow_ui(two_r.get_mpz_t(), 2, static_cast<unsigned long>(r));
  mpq_class lower_factor(two_r, factorial(static_cast<unsigned>(r)));
  lower_factor.canonicalize();

  const Symbolic omega = omega_ball(r);
  const auto [omega_q, pi_power] = *omega.as_rational_pi_power();

  MinkowskiCertificate c;
  c.rank = r;
  c.lower = lower_factor.get_d() * std::sqrt(d.get_d());
  c.upper = two_r.get_d() * std::sqrt(d.get_d());
  c.middle = omega.evaluate() * std::sqrt(prod.get_d());
  c.lower_exact = times_sqrt(Symbolic(lower_factor), d);
  c.upper_exact = times_sqrt(Symbolic(mpq_class(two_r)), d);
  c.middle_exact = times_sqrt(omega, prod);

  // Squared comparisons: lower^2 = f^2 d, middle^2 = q^2 pi^(2k) prod, upper^2 = 4^r d.
  const mpq_class lower_sq = lower_factor * lower_factor * d;
  const mpq_class middle_rational = omega_q * omega_q * prod;
  const mpq_class upper_sq = mpq_class(two_r * two_r * d);
  if (pi_power == 0) {
    c.lower_holds = lower_sq <= middle_rational;
    c.upper_holds = middle_rational <= upper_sq;
  } else {
    mpfr_t lo, hi;
    mpfr_init2(lo, 256);
    mpfr_init2(hi, 256);
    mpfr_const_pi(lo, MPFR_RNDD);
    mpfr_const_pi(hi, MPFR_RNDU);
    mpfr_pow_si(lo, lo, 2 * pi_power, MPFR_RNDD);
    mpfr_pow_si(hi, hi, 2 * pi_power, MPFR_RNDU);
    mpfr_mul_q(lo, lo, middle_rational.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi, hi, middle_rational.get_mpq_t(), MPFR_RNDU);
    c.lower_holds = mpfr_cmp_q(lo, lower_sq.get_mpq_t()) >= 0;
    c.upper_holds = mpfr_cmp_q(hi, upper_sq.get_mpq_t()) <= 0;
    mpfr_clear(lo);
    mpfr_clear(hi);
  }
  if (!c.lower_holds || !c.upper_holds) {
    fail(ErrorCode::CertificateViolation, "Minkowski inequalities fail for " +
                                              lattice.basis().to_string());
  }
  return c;
}

}  // namespace ecbounds
