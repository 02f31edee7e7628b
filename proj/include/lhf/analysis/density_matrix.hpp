// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "lhf/core/types.hpp"
#include "lhf/hartree_fock/hartree_fock.hpp"
#include "lhf/many_body/determinant_basis.hpp"

namespace lhf {

/// omega[a,c] = <Psi| a+_c a_a |Psi>.
MatrixXcd rdm_exact(const VectorXcd& psi, const DeterminantBasis& basis);

/// sum_l phi_l phi_l^dagger.
MatrixXcd rdm_slater(const HFState& state);

/// Sum of |eigenvalues| of a - b. Both must be Hermitian within 1e-8.
double trace_norm_diff(const MatrixXcd& a, const MatrixXcd& b);

}  // namespace lhf
