// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "lhf/core/config.hpp"
#include "lhf/core/constants.hpp"
#include "lhf/core/potential.hpp"
#include "lhf/hartree_fock/hartree_fock.hpp"
#include "lhf/many_body/determinant_basis.hpp"
#include "lhf/many_body/hamiltonian.hpp"

namespace lhf {

/// || exact - embed(hf) ||.
double error_norm(const VectorXcd& exact, const HFState& hf, const DeterminantBasis& basis);

/// (1/hbar) sqrt(N (N-1)) ||V||_inf t.
double apriori_bound(int N, double v_norm, const PhysicalConstants& constants, double t);

/// The residual du/dt - H u / (i hbar) of a Slater trajectory, split by
/// how many orbitals each component replaces relative to span{phi_l}.
struct Defect {
  VectorXcd vector;
  double norm = 0.0;
  /// Norms of the 0-, 1-, 2- and >= 3-replacement components.
  std::array<double, 4> sectors{};
};

/// Components outside the 2-replacement sector above `tolerance` raise
/// SupportViolation.
Defect defect(const HFState& state, const SparseMatrixXcd& H, const DeterminantBasis& basis, const HFModel& model,
              double tolerance = 1e-8);

double defect_norm(const HFState& state, const SparseMatrixXcd& H, const DeterminantBasis& basis,
                   const HFModel& model);

/// Splits `x` by replacement count relative to the span of the orthonormal
/// columns of `orbitals`.
std::array<double, 4> replacement_sectors(const VectorXcd& x, const MatrixXcd& orbitals, const DeterminantBasis& basis);

/// Determinant coefficients of c_1 ^ ... ^ c_N with no orthonormality check.
VectorXcd wedge_coefficients(const MatrixXcd& orbitals, const DeterminantBasis& basis);

/// Mean-field/semiclassical scaling hbar -> hbar / sqrt(N), V -> V / N.
struct ScalingConfig {
  SimulationConfig base;
  PhysicalConstants constants;
  PotentialSpec potential;

  /// Bound of the rescaled problem, (1/hbar_eff) sqrt(N(N-1)) ||V_eff||_inf t.
  double bound(double v_norm, double t) const;
  /// Its closed form (1/hbar) sqrt(N-1) ||V||_inf t in the base units.
  double analytic_bound(double v_norm, double t) const;
};

ScalingConfig rescale_mean_field(const SimulationConfig& config);

}  // namespace lhf
