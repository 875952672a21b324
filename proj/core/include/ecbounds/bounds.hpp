// Copyright 2026 The ecbounds Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ecbounds/certificate.hpp"
#include "ecbounds/curve.hpp"
#include "ecbounds/habegger.hpp"
#include "ecbounds/heights.hpp"
#include "ecbounds/lattice.hpp"
#include "ecbounds/symbolic.hpp"

namespace ecbounds {

/// Degree of the multiplication-by-m map on E: (3/2)(m^2 + 1).
mpq_class d_mult_bound(int m);
/// Degree of the sum of M points of degrees d_1..d_M: 12^(M-1) sum d_i.
mpq_class d_sum_bound(const std::vector<mpq_class>& d);
/// Degree of l_1 P_1 + ... + l_N P_N: (3/2) 12^(N-1) (N + sum l_i^2).
mpq_class d_linear_bound(const std::vector<std::int64_t>& l);

/// deg(H + P) <= c1(N) ((3/2)(N+1) 12^(N-1))^s prod |u_i|^2 for the subgroup
/// cut out by the rows u_1..u_s.
BoundCertificate translate_degree_bound(const std::vector<IntVector>& u, int n);

/// h(H + P) <= 3N(N-s+1)4^N / (omega_(N-s) omega_s)^2 c4(N,s) prod |u_i|^2
///             sum_i h_hat(u_i(P)) / |u_i|^2 + c6(E,N,s) prod |u_i|^2,
/// using the upper ends of the height intervals.
BoundCertificate translate_height_bound(const std::vector<IntVector>& u,
                                        const std::vector<HeightInterval>& heights,
                                        const Curve& curve, int n);

/// Rank-one data P_i = sum_j v_ij g_j on E^N.
struct PointDecomposition {
  IntegerMatrix v;                  // N x m
  std::vector<double> gen_heights;  // h_hat(g_j)
  std::vector<Point> points;        // P_1..P_N
};

struct AuxiliarySubgroup {
  IntegerMatrix h;  // s x N, rows u_i
  LinearFormSystem forms;
  HabeggerResult search;
  BoundCertificate degree;  // deg(H + P) <= c4(N, s) T
  BoundCertificate height;  // h(H + P) <= c5 T^(1 - N/(ms)) h_hat(P) + c6 T
};

struct AuxiliaryOptions {
  double tol = 1e-3;
  HabeggerSearchOptions search;
};

/// Forms from the decomposition, Habegger vectors at sqrt(T), then both
/// subgroup certificates.
AuxiliarySubgroup auxiliary_subgroup(const PointDecomposition& data, int s, double t,
                                     const AuxiliaryOptions& options = {});

/// T = ((N/(N-1)) c11(N) deg V / 3)^(N-1), exact.
Symbolic choose_t(int n, long deg_v);

/// Height bound for points of rank-one-translate intersections on V in E^N;
/// closed form and proof chain both recorded. N = 2 gives 0.
BoundCertificate theorem12_bound(const Curve& curve, int n, double h_v, long deg_v);

enum class Theorem14Variant { WeakTransverse, TransverseE2 };

struct Theorem14Input {
  Theorem14Variant variant = Theorem14Variant::TransverseE2;
  int n = 2;  // ambient power for the weak-transverse variant
  /// h(C) as an exact expression; Atom::HV stands for h_c_value.
  Symbolic h_c = Symbolic::atom(Atom::HV);
  double h_c_value = 0.0;
  long deg_c = 1;
  mpq_class epsilon = 0;
};

/// Rank <= 1 points on a curve C: for E^2, D1 h(C) deg^2 + D2 deg^3 + D3 and
/// the chain 2 C1(3) h(C) deg^2 + (C2 + 6 c2 C1 + 2 c3 C1) deg^3 + C3 (+ 6 eps C1 deg^2).
BoundCertificate theorem14_bound(const Curve& curve, const Theorem14Input& input);

}  // namespace ecbounds
