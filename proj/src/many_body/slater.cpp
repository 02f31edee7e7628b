// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/many_body/slater.hpp"

#include <sstream>

namespace lhf {

VectorXcd embed_slater(cplx phase, const MatrixXcd& orbitals, const DeterminantBasis& basis) {
  if (orbitals.rows() != basis.K() || orbitals.cols() != basis.N())
    raise(ErrorCode::DimensionMismatch, "orbital matrix is " + std::to_string(orbitals.rows()) + "x" +
                                            std::to_string(orbitals.cols()));
  const double dev = orthonormality_defect(orbitals);
  if (dev > 1e-6) {
    std::ostringstream msg;
    msg << "Gram deviation " << dev;
    raise(ErrorCode::NotOrthonormal, msg.str());
  }
  const int N = basis.N();
  VectorXcd out(basis.size());
#pragma omp parallel
  {
    MatrixXcd sub(N, N);
#pragma omp for schedule(static)
    for (Eigen::Index d = 0; d < basis.size(); ++d) {
      int r = 0;
      for (Occupation occ = basis[d]; occ; occ &= occ - 1) sub.row(r++) = orbitals.row(std::countr_zero(occ));
      out(d) = phase * sub.partialPivLu().determinant();
    }
  }
  return out;
}

}  // namespace lhf
