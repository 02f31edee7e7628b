// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "lhf/core/config.hpp"
#include "lhf/core/constants.hpp"
#include "lhf/core/types.hpp"
#include "lhf/many_body/interaction.hpp"

namespace lhf {

/// Slater trial state u = a phi_1 ^ ... ^ phi_N with orbitals stored as the
/// columns of a K x N coefficient matrix in the Landau basis.
struct HFState {
  double t = 0.0;
  cplx a{1.0, 0.0};
  MatrixXcd orbitals;
  /// Energy of the initial state, frozen for the phase equation.
  double E0 = 0.0;

  int N() const { return int(orbitals.cols()); }
  int K() const { return int(orbitals.rows()); }
};

/// Everything the right-hand side needs besides the state.
struct HFModel {
  VectorXd energies;
  InteractionTensor tensor;
  PhysicalConstants constants;
};

/// J(rho)[a,c] = sum_{b,d} v[a,b,c,d] rho[d,b].
MatrixXcd direct_matrix(const InteractionTensor& tensor, const MatrixXcd& rho);
/// X(rho)[a,d] = sum_{b,c} v[a,b,c,d] rho[c,b].
MatrixXcd exchange_matrix(const InteractionTensor& tensor, const MatrixXcd& rho);

/// K_l phi_l: the direct potential of all orbitals but l, applied to phi_l.
VectorXcd direct_potential_action(const MatrixXcd& orbitals, const InteractionTensor& tensor, int l);
/// sum_{l' != l} X_{l,l'} phi_{l'}.
VectorXcd exchange_potential_action(const MatrixXcd& orbitals, const InteractionTensor& tensor, int l);

/// Fock matrix H_1 + J(rho) - X(rho) with rho the full orbital projector.
/// The l' = l terms of the direct and exchange sums cancel, so it
/// generates every orbital's motion at once.
MatrixXcd fock_matrix(const MatrixXcd& orbitals, const HFModel& model);

struct HFDerivative {
  cplx a_dot;
  MatrixXcd orbitals_dot;
};

/// i hbar dphi_l/dt = H_1 phi_l + K_l phi_l - sum_{l' != l} X_{l,l'} phi_{l'},
/// i hbar da/dt = (E0 - sum_l <phi_l | i hbar dphi_l/dt>) a.
HFDerivative hf_rhs(const HFState& state, const HFModel& model);

/// <u|H_N|u> for orthonormal orbitals.
double hf_energy(const HFState& state, const HFModel& model);

/// State at t = 0 with E0 taken from the orbitals.
HFState make_hf_state(cplx a, MatrixXcd orbitals, const HFModel& model);

/// phi'_i = sum_j phi_j U_ji, a' = a / det U. The Slater state is unchanged.
HFState gauge_transform(const HFState& state, const MatrixXcd& U);

/// Symmetric orthonormalization C S^{-1/2}, compensated by a det(S^{1/2}).
HFState reorthonormalize(const HFState& state);

HFState rk4_step(const HFState& state, double dt, const HFModel& model);

struct HFSample {
  HFState state;
  double energy = 0.0;
  double norm = 0.0;
  double orth_drift = 0.0;
};

struct HFTrajectory {
  std::vector<HFSample> samples;
  /// Largest per-step change of the orthonormality defect.
  double max_step_drift = 0.0;
};

/// Called with the state at t = 0 and after every step.
using StepObserver = std::function<void(const HFState&)>;

/// Integrates to t_final in steps of dt (the last one shortened if needed),
/// sampling every `sample_every` steps and at the end.
HFTrajectory integrate_hf(const HFState& initial, double dt, double t_final, Scheme scheme, const HFModel& model,
                          int sample_every = 1, const StepObserver& observer = {});

}  // namespace lhf
