// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ecbounds {

using IntVector = std::vector<mpz_class>;

mpz_class dot(const IntVector& a, const IntVector& b);
mpz_class norm_squared(const IntVector& v);
IntVector to_int_vector(const std::vector<std::int64_t>& v);

/// Dense r x N matrix of arbitrary-precision integers, stored by rows.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);
  explicit IntegerMatrix(std::vector<IntVector> rows);
  static IntegerMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntegerMatrix identity(int n);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const mpz_class& operator()(int i, int j) const { return rows_[i][j]; }
  mpz_class& operator()(int i, int j) { return rows_[i][j]; }
  const IntVector& row(int i) const { return rows_[i]; }
  const std::vector<IntVector>& row_vectors() const { return rows_; }

  int rank() const;
  /// NotSquare unless rows() == cols().
  mpz_class determinant() const;
  /// M M^t.
  IntegerMatrix gram() const;
  IntegerMatrix transpose() const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  std::string to_string() const;  // "[[1,2],[3,4]]"

 private:
  int cols_ = 0;
  std::vector<IntVector> rows_;
};

/// Fraction-free (Bareiss) determinant of a square matrix given by rows.
mpz_class bareiss_determinant(std::vector<IntVector> m);

/// Sublattice of Z^N generated by the (independent) rows of a basis matrix.
class IntegerLattice {
 public:
  /// BadParams if the rows are dependent or the matrix is empty.
  explicit IntegerLattice(IntegerMatrix basis);

  const IntegerMatrix& basis() const { return basis_; }
  int rank() const { return basis_.rows(); }
  int ambient_dimension() const { return basis_.cols(); }
  /// det(M M^t) = (det Lambda)^2, exact.
  const mpz_class& det_squared() const { return det_sq_; }

 private:
  IntegerMatrix basis_;
  mpz_class det_sq_;
};

struct EnumerationBudget {
  std::uint64_t max_nodes = 20'000'000;
};

/// lambda_i = sqrt(norms_squared[i]), attained by vectors[i]; vectors are
/// independent, sign-normalized (first nonzero coordinate positive) and, among
/// equal norms, lexicographically smallest first.
struct SuccessiveMinima {
  std::vector<mpz_class> norms_squared;
  std::vector<IntVector> vectors;
  std::uint64_t nodes = 0;
  std::vector<double> minima() const;
};

/// Exact minima by enumerating every lattice vector in the ball whose radius is
/// the longest vector of a reduced basis. BudgetExceeded past the node budget.
SuccessiveMinima successive_minima(const IntegerLattice& lattice,
                                   const EnumerationBudget& budget = {});

/// det Lambda = sqrt(det(M M^t)).
double det_lattice(const IntegerLattice& lattice);

/// LLL reduction (delta = 3/4) in exact rational arithmetic; the result
/// generates the same lattice.
IntegerMatrix lll_reduce(const IntegerMatrix& basis);

/// Lattice of integer vectors orthogonal to every basis vector of L.
struct OrthogonalLattice {
  IntegerLattice lattice;
  /// True when the basis rows realize the successive minima in order.
  bool minima_basis = false;
};
/// BadParams unless rank < ambient dimension.
OrthogonalLattice orthogonal_lattice(const IntegerLattice& lattice,
                                     const EnumerationBudget& budget = {});

/// Transposed cofactor matrix: M adj(M) = det(M) I. NotSquare otherwise.
IntegerMatrix adjugate(const IntegerMatrix& m);
/// Every entry of column i of adj(M) is at most prod_{l != i} |row_l| in
/// absolute value; checked in squared integers.
bool adjugate_column_bound_holds(const IntegerMatrix& m, const IntegerMatrix& adj);

/// (2^r / r!) det <= omega_r prod lambda_i <= 2^r det.
struct MinkowskiCertificate {
  int rank = 0;
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  std::string lower_exact;
  std::string middle_exact;
  std::string upper_exact;
  bool lower_holds = false;
  bool upper_holds = false;
};
/// Throws CertificateViolation if either inequality fails.
MinkowskiCertificate minkowski_certificate(const IntegerLattice& lattice,
                                           const EnumerationBudget& budget = {});

}  // namespace ecbounds
