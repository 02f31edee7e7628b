// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "lhf/core/config.hpp"
#include "lhf/hartree_fock/hartree_fock.hpp"
#include "lhf/landau/orbital_set.hpp"
#include "lhf/many_body/determinant_basis.hpp"
#include "lhf/many_body/ground_state.hpp"
#include "lhf/many_body/hamiltonian.hpp"
#include "lhf/many_body/interaction.hpp"

namespace lhf {

/// Everything derived from a config before any time stepping.
struct Problem {
  SimulationConfig config;
  OrbitalSet orbitals;
  HFModel model;
  double v_norm = 0.0;
  GroundState ground;
  std::optional<DeterminantBasis> basis;
  SparseMatrixXcd H;
};

/// Builds the basis, tensor and ground state; the determinant space and
/// H_N only when `many_body` is set.
Problem build_problem(const SimulationConfig& config, bool many_body = true);

/// Slater state of the lowest non-interacting ground-state occupation.
HFState initial_hf_state(const Problem& problem);

struct ComparisonRecord {
  double t = 0.0;
  double error_norm = 0.0;
  double apriori_bound = 0.0;
  double defect_bound = 0.0;
  double energy_exact = 0.0;
  double energy_hf = 0.0;
  double rdm_trace_dist = 0.0;
};

struct ComparisonSummary {
  long samples = 0;
  long steps = 0;
  long dimension = 0;
  int K = 0;
  int N = 0;
  double v_norm = 0.0;
  double max_error_norm = 0.0;
  double max_error_over_apriori = 0.0;
  double max_error_over_defect = 0.0;
  double max_defect_over_apriori = 0.0;
  long apriori_violations = 0;
  long defect_violations = 0;
  long hierarchy_violations = 0;
  long triangle_violations = 0;
  double initial_defect_slope = 0.0;
  double apriori_slope = 0.0;
  double small_time_error_slope = 0.0;
  double max_defect_norm = 0.0;
  double max_sector_leak = 0.0;
  double max_energy_drift_hf = 0.0;
  double max_energy_drift_exact = 0.0;
  double max_phase_modulus_dev = 0.0;
  double max_orth_drift = 0.0;
  double rdm_trace_dist_t0 = 0.0;
  double max_rdm_trace_dist = 0.0;
};

struct ComparisonResult {
  std::vector<ComparisonRecord> records;
  ComparisonSummary summary;
};

/// Slack applied to every bound comparison.
inline constexpr double kBoundSlack = 1e-7;

/// Runs the exact and Hartree-Fock dynamics from the same Slater state and
/// compares them at every sample. The defect is evaluated at every step and
/// integrated with the trapezoid rule.
ComparisonResult run_comparison(const Problem& problem);

}  // namespace lhf
