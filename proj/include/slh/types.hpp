// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace slh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

// Shared numerical tolerances.  Scattering matrices and the quantities
// derived from them are O(1), so these are used as absolute bounds there;
// checks on rate-scaled matrices rescale by the matrix magnitude.
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kRealizabilityTol = 1e-9;

// diag(I_k, -I_k), the indefinite metric of the doubled-up representation.
Matrix dup_metric(Index k);

// [[X, Y], [conj(Y), conj(X)]].  X and Y must have equal shapes.
Matrix doubled_up(const Matrix& x, const Matrix& y);

// Entrywise maximum modulus; zero for an empty matrix.
double max_abs(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);
bool is_symmetric(const Matrix& m, double tol = kHermitianTol);
bool is_unitary(const Matrix& m, double tol = kUnitaryTol);

// n equally spaced samples covering [lo, hi]; n == 1 gives {lo}.
RealVector linspace(double lo, double hi, Index n);

}  // namespace slh
