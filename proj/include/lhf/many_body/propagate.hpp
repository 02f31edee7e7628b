// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Eigenvalues>

#include "lhf/core/constants.hpp"
#include "lhf/many_body/hamiltonian.hpp"

namespace lhf {

/// exp(-i H t / hbar) for a fixed Hermitian H. Up to `dense_limit` states
/// the eigendecomposition is computed once and reused for every t; above
/// it each call runs a Lanczos exponential with adaptive substeps.
class Propagator {
 public:
  static constexpr Eigen::Index kDenseLimit = 2000;

  Propagator(SparseMatrixXcd H, double hbar, Eigen::Index dense_limit = kDenseLimit, double tolerance = 1e-10);

  bool is_dense() const { return dense_; }
  Eigen::Index dim() const { return H_.rows(); }

  VectorXcd apply(const VectorXcd& psi, double t) const;

  /// Eigenvalues of H, ascending. Only available on the dense path.
  const VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  VectorXcd krylov(const VectorXcd& psi, double t) const;

  SparseMatrixXcd H_;
  double hbar_;
  double tolerance_;
  bool dense_;
  MatrixXcd eigenvectors_;
  VectorXd eigenvalues_;
};

/// exp(-i H t / hbar) psi. `psi` must be normalized within 1e-9.
VectorXcd evolve_exact(const VectorXcd& psi, const SparseMatrixXcd& H, double t, const PhysicalConstants& constants);

/// <psi|H|psi>.
double expectation(const SparseMatrixXcd& H, const VectorXcd& psi);

}  // namespace lhf
