// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/analysis/compare.hpp"

#include <algorithm>
#include <cmath>

#include "lhf/analysis/density_matrix.hpp"
#include "lhf/analysis/error_bounds.hpp"
#include "lhf/core/error.hpp"
#include "lhf/many_body/propagate.hpp"
#include "lhf/many_body/slater.hpp"

namespace lhf {

Problem build_problem(const SimulationConfig& config, bool many_body) {
  OrbitalSet orbitals = build_orbital_set(config);
  InteractionTensor tensor = two_body_tensor(config.potential, orbitals);
  const double v_norm = config.potential.sup_norm(orbitals.grid());
  HFModel model{orbitals.energies(), std::move(tensor), config.constants};
  GroundState ground = noninteracting_ground_state(FillingSpec(config.N, config.domain.M), model.energies);
  Problem p{config, std::move(orbitals), std::move(model), v_norm, std::move(ground), std::nullopt, {}};
  if (many_body) {
    p.basis.emplace(config.K(), config.N);
    p.H = assemble_hamiltonian(*p.basis, p.model.energies, p.model.tensor);
  }
  return p;
}

HFState initial_hf_state(const Problem& problem) {
  const int K = problem.config.K(), N = problem.config.N;
  MatrixXcd C = MatrixXcd::Zero(K, N);
  const std::vector<int> occ = occupied_indices(problem.ground.occupations.front());
  for (int l = 0; l < N; ++l) C(occ[std::size_t(l)], l) = 1.0;
  return make_hf_state(1.0, std::move(C), problem.model);
}

ComparisonResult run_comparison(const Problem& problem) {
  if (!problem.basis) raise(ErrorCode::PreconditionFailed, "problem built without the many-body space");
  const SimulationConfig& cfg = problem.config;
  const DeterminantBasis& basis = *problem.basis;
  const HFState start = initial_hf_state(problem);
  const VectorXcd psi0 = embed_slater(start.a, start.orbitals, basis);

  // Trapezoid integral of the defect norm, stored per step.
  std::vector<double> step_times, step_integral;
  double last_defect = 0.0, first_defect = 0.0, max_leak = 0.0, max_defect = 0.0;
  auto observe = [&](const HFState& s) {
    const Defect d = defect(s, problem.H, basis, problem.model);
    max_leak = std::max({max_leak, d.sectors[0], d.sectors[1], d.sectors[3]});
    max_defect = std::max(max_defect, d.norm);
    if (step_times.empty()) {
      first_defect = d.norm;
      step_integral.push_back(0.0);
    } else {
      step_integral.push_back(step_integral.back() + 0.5 * (s.t - step_times.back()) * (d.norm + last_defect));
    }
    step_times.push_back(s.t);
    last_defect = d.norm;
  };
  const HFTrajectory traj = integrate_hf(start, cfg.dt, cfg.t_final, cfg.integrator, problem.model,
                                         cfg.sample_every, observe);

  const Propagator propagator(problem.H, cfg.constants.hbar());
  const std::size_t S = traj.samples.size();
  ComparisonResult result;
  result.records.resize(S);
  std::vector<double> defect_at_sample(S);
  {
    std::size_t k = 0;
    for (std::size_t s = 0; s < S; ++s) {
      while (step_times[k] != traj.samples[s].state.t) ++k;
      defect_at_sample[s] = step_integral[k];
    }
  }
  const MatrixXcd rdm0_exact = rdm_exact(psi0, basis);

#pragma omp parallel for schedule(static)
  for (std::size_t s = 0; s < S; ++s) {
    const HFSample& sample = traj.samples[s];
    const double t = sample.state.t;
    const VectorXcd psi = propagator.apply(psi0, t);
    ComparisonRecord& r = result.records[s];
    r.t = t;
    r.error_norm = (psi - embed_slater(sample.state.a, sample.state.orbitals, basis)).norm();
    r.apriori_bound = apriori_bound(cfg.N, problem.v_norm, cfg.constants, t);
    r.defect_bound = defect_at_sample[s];
    r.energy_exact = expectation(problem.H, psi);
    r.energy_hf = sample.energy;
    r.rdm_trace_dist = trace_norm_diff(s == 0 ? rdm0_exact : rdm_exact(psi, basis), rdm_slater(sample.state));
  }

  ComparisonSummary& sum = result.summary;
  sum.samples = long(S);
  sum.steps = long(step_times.size()) - 1;
  sum.dimension = long(basis.size());
  sum.K = cfg.K();
  sum.N = cfg.N;
  sum.v_norm = problem.v_norm;
  sum.initial_defect_slope = first_defect;
  sum.apriori_slope = apriori_bound(cfg.N, problem.v_norm, cfg.constants, 1.0);
  sum.max_defect_norm = max_defect;
  sum.max_sector_leak = max_leak;
  const double e0_hf = result.records.front().energy_hf, e0_exact = result.records.front().energy_exact;
  sum.rdm_trace_dist_t0 = result.records.front().rdm_trace_dist;
  for (std::size_t s = 0; s < S; ++s) {
    const ComparisonRecord& r = result.records[s];
    const HFSample& sample = traj.samples[s];
    sum.max_error_norm = std::max(sum.max_error_norm, r.error_norm);
    if (r.apriori_bound > 0.0) sum.max_error_over_apriori = std::max(sum.max_error_over_apriori, r.error_norm / r.apriori_bound);
    if (r.defect_bound > 0.0) sum.max_error_over_defect = std::max(sum.max_error_over_defect, r.error_norm / r.defect_bound);
    if (r.apriori_bound > 0.0) sum.max_defect_over_apriori = std::max(sum.max_defect_over_apriori, r.defect_bound / r.apriori_bound);
    if (r.error_norm > r.apriori_bound + kBoundSlack) ++sum.apriori_violations;
    if (r.error_norm > r.defect_bound + kBoundSlack) ++sum.defect_violations;
    if (r.defect_bound > r.apriori_bound + kBoundSlack) ++sum.hierarchy_violations;
    if (r.error_norm > 2.0 + 1e-12) ++sum.triangle_violations;
    if (r.t > 0.0 && r.t <= 0.05) sum.small_time_error_slope = std::max(sum.small_time_error_slope, r.error_norm / r.t);
    sum.max_energy_drift_hf = std::max(sum.max_energy_drift_hf, std::abs(r.energy_hf - e0_hf));
    sum.max_energy_drift_exact = std::max(sum.max_energy_drift_exact, std::abs(r.energy_exact - e0_exact));
    sum.max_phase_modulus_dev = std::max(sum.max_phase_modulus_dev, std::abs(std::abs(sample.state.a) - 1.0));
    sum.max_orth_drift = std::max(sum.max_orth_drift, sample.orth_drift);
    sum.max_rdm_trace_dist = std::max(sum.max_rdm_trace_dist, r.rdm_trace_dist);
  }
  return result;
}

}  // namespace lhf
