// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/analysis/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

#include "lhf/core/error.hpp"

namespace lhf {

MatrixXcd rdm_exact(const VectorXcd& psi, const DeterminantBasis& basis) {
  if (psi.size() != basis.size()) raise(ErrorCode::DimensionMismatch, "state length");
  const int K = basis.K();
  MatrixXcd omega = MatrixXcd::Zero(K, K);
  // Row a of omega collects every hop out of mode a; rows are independent.
#pragma omp parallel for schedule(static)
  for (int a = 0; a < K; ++a) {
    for (Eigen::Index d = 0; d < basis.size(); ++d) {
      const Occupation occ = basis[d];
      if (!(occ >> a & 1)) continue;
      const double s_a = mode_sign(occ, a);
      const Occupation hole = occ & ~(Occupation(1) << a);
      for (int c = 0; c < K; ++c) {
        if (hole >> c & 1) continue;
        const Occupation target = hole | (Occupation(1) << c);
        const double s = s_a * mode_sign(hole, c);
        omega(a, c) += std::conj(psi(basis.index(target))) * psi(d) * s;
      }
    }
  }
  return omega;
}

MatrixXcd rdm_slater(const HFState& state) { return state.orbitals * state.orbitals.adjoint(); }

double trace_norm_diff(const MatrixXcd& a, const MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    raise(ErrorCode::DimensionMismatch, "trace_norm_diff shapes");
  for (const MatrixXcd* m : {&a, &b}) {
    const double dev = (*m - m->adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-8) {
      std::ostringstream msg;
      msg << "|A - A^dagger| = " << dev;
      raise(ErrorCode::NotHermitian, msg.str());
    }
  }
  const MatrixXcd diff = a - b;
  const MatrixXcd sym = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().sum();
}

}  // namespace lhf
