// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/SparseCore>

#include "lhf/core/types.hpp"
#include "lhf/many_body/determinant_basis.hpp"
#include "lhf/many_body/interaction.hpp"

namespace lhf {

using SparseMatrixXcd = Eigen::SparseMatrix<cplx>;

/// H_N = sum_a E_a n_a + sum_{a<b, c<d} (v[a,b,c,d] - v[a,b,d,c]) a+_a a+_b a_d a_c
/// on the determinant basis. Columns are built independently, so the
/// result does not depend on the thread count.
SparseMatrixXcd assemble_hamiltonian(const DeterminantBasis& basis, const VectorXd& energies,
                                     const InteractionTensor& tensor);

/// Largest |H - H^dagger| entry.
double hermiticity_defect(const SparseMatrixXcd& H);

}  // namespace lhf
