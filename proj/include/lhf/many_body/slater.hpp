// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "lhf/core/error.hpp"
#include "lhf/core/types.hpp"
#include "lhf/many_body/determinant_basis.hpp"

namespace lhf {

/// <psi_1 ^ ... ^ psi_N | phi_1 ^ ... ^ phi_N> = det[<psi_i|phi_j>] for
/// orbitals stored as columns of coefficient matrices.
template <typename DerivedA, typename DerivedB>
cplx slater_overlap(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows())
    raise(ErrorCode::LengthMismatch,
          std::to_string(a.cols()) + " vs " + std::to_string(b.cols()) + " orbitals");
  if (a.cols() == 0) return 1.0;
  const MatrixXcd overlaps = a.adjoint() * b;
  return overlaps.partialPivLu().determinant();
}

/// max |C^dagger C - I| over entries.
template <typename Derived>
double orthonormality_defect(const Eigen::MatrixBase<Derived>& c) {
  const MatrixXcd g = c.adjoint() * c;
  return (g - MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

/// Coefficients of phase * (c_1 ^ ... ^ c_N) on the determinant basis:
/// entry D is phase * det(C restricted to the rows occupied in D).
VectorXcd embed_slater(cplx phase, const MatrixXcd& orbitals, const DeterminantBasis& basis);

}  // namespace lhf
