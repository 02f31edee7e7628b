// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/landau/orbital_set.hpp"

#include <cmath>
#include <sstream>

#include "lhf/core/error.hpp"
#include "lhf/landau/orbital.hpp"

namespace lhf {

OrbitalSet::OrbitalSet(Grid grid, int n_max, int M, std::vector<OrbitalField> orbitals, VectorXd energies)
    : grid_(grid), n_max_(n_max), M_(M), orbitals_(std::move(orbitals)), energies_(std::move(energies)) {
  const int K = size();
  if (K != (n_max + 1) * M || energies_.size() != K) raise(ErrorCode::DimensionMismatch, "orbital set size");
  MatrixXcd samples(grid_.size(), K);
  for (int k = 0; k < K; ++k) {
    if (!(orbitals_[k].grid == grid_)) raise(ErrorCode::GridMismatch, "orbital " + std::to_string(k));
    samples.col(k) = orbitals_[k].values.reshaped();
  }
  gram_ = grid_.weight() * (samples.adjoint() * samples);
  for (int l = 0; l < K; ++l)
    for (int k = 0; k < K; ++k) {
      const double dev = std::abs(gram_(k, l) - (k == l ? 1.0 : 0.0));
      if (dev > gram_dev_) {
        gram_dev_ = dev;
        worst_ = {k, l};
      }
    }
}

OrbitalSet build_orbital_set(const DomainConfig& domain, const PhysicalConstants& constants, int n_max,
                             const Grid& grid, int lattice_cut, double tolerance) {
  if (n_max < 0) raise(ErrorCode::InvalidValue, "n_max");
  const int M = domain.M;
  const int K = (n_max + 1) * M;
  std::vector<OrbitalField> orbitals(static_cast<std::size_t>(K));
  VectorXd energies(K);
  for (int k = 0; k < K; ++k) energies(k) = landau_level(k / M, constants);
  // Validate the cut once per level before entering the parallel region.
  for (int n = 0; n <= n_max; ++n) LandauOrbital(n, 0, constants, domain, lattice_cut);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < K; ++k) orbitals[std::size_t(k)] = finite_volume_orbital(k / M, k % M, grid, constants, domain, lattice_cut);
  OrbitalSet set(grid, n_max, M, std::move(orbitals), std::move(energies));
  if (set.gram_deviation() > tolerance) {
    const auto [k, l] = set.worst_pair();
    std::ostringstream msg;
    msg.precision(3);
    msg << "pair (" << k << ", " << l << ") deviates by " << set.gram_deviation();
    raise(ErrorCode::OrthonormalityFailure, msg.str());
  }
  return set;
}

OrbitalSet build_orbital_set(const SimulationConfig& config) {
  return build_orbital_set(config.domain, config.constants, config.n_max, config.grid(), config.lattice_cut,
                           config.gram_tolerance);
}

}  // namespace lhf
