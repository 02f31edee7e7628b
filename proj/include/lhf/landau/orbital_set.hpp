// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lhf/core/config.hpp"
#include "lhf/core/constants.hpp"
#include "lhf/core/grid.hpp"
#include "lhf/core/types.hpp"

namespace lhf {

/// The truncated Landau basis phi_{n,m}, n = 0..n_max, m = 0..M-1, stored in
/// (n, m) lexicographic order: index k = n M + m.
class OrbitalSet {
 public:
  OrbitalSet(Grid grid, int n_max, int M, std::vector<OrbitalField> orbitals, VectorXd energies);

  const Grid& grid() const { return grid_; }
  int size() const { return int(orbitals_.size()); }
  int n_max() const { return n_max_; }
  int M() const { return M_; }
  int index(int n, int m) const { return n * M_ + m; }
  OrbitalLabel label(int k) const { return {k / M_, k % M_}; }

  const OrbitalField& operator[](int k) const { return orbitals_.at(std::size_t(k)); }
  const std::vector<OrbitalField>& orbitals() const { return orbitals_; }

  /// Gram matrix <phi_k, phi_l> under grid quadrature.
  const MatrixXcd& gram() const { return gram_; }
  /// Landau level E_n of each orbital.
  const VectorXd& energies() const { return energies_; }

  /// max |Gram - I| over entries, and the pair where it occurs.
  double gram_deviation() const { return gram_dev_; }
  std::pair<int, int> worst_pair() const { return worst_; }

 private:
  Grid grid_;
  int n_max_;
  int M_;
  std::vector<OrbitalField> orbitals_;
  VectorXd energies_;
  MatrixXcd gram_;
  double gram_dev_ = 0.0;
  std::pair<int, int> worst_{0, 0};
};

/// Samples every orbital and checks orthonormality; a Gram deviation above
/// `tolerance` raises OrthonormalityFailure naming the worst pair.
OrbitalSet build_orbital_set(const DomainConfig& domain, const PhysicalConstants& constants, int n_max,
                             const Grid& grid, int lattice_cut = 0, double tolerance = 1e-8);

OrbitalSet build_orbital_set(const SimulationConfig& config);

}  // namespace lhf
