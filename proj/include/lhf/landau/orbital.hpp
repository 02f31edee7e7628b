// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "lhf/core/constants.hpp"
#include "lhf/core/grid.hpp"
#include "lhf/core/types.hpp"
#include "lhf/landau/hermite.hpp"

namespace lhf {

/// Plane-wave Landau state on the whole plane,
/// exp(i k2 x2) b^{1/4} h_n(sqrt(b) (x1 - k2/b)).
cplx infinite_volume_orbital(int n, double k2, double x1, double x2, const PhysicalConstants& constants);

/// Smallest lattice cut for which every dropped image of h_n lies below
/// 1e-14 of its peak anywhere in the box.
int required_lattice_cut(int n, const PhysicalConstants& constants, const DomainConfig& domain);

/// Finite-volume Landau orbital phi_{n,m}, the magnetic-translation
/// saturation of the plane-wave state with k2 = 2 pi m / L2:
///
///   phi_{n,m}(x) = b^{1/4} exp(i 2 pi m x2/L2) / sqrt(L2)
///                  * sum_{|l| <= cut} exp(-i 2 pi M l x2/L2) h_n(sqrt(b)(x1 + (l - m/M) L1)).
///
/// Evaluates anywhere in the plane. `lattice_cut` = 0 picks the required
/// cut; a positive value below it raises TruncationTooSmall.
class LandauOrbital {
 public:
  LandauOrbital(int n, int m, const PhysicalConstants& constants, const DomainConfig& domain,
                int lattice_cut = 0);

  int n() const { return n_; }
  int m() const { return m_; }
  int lattice_cut() const { return cut_; }

  cplx operator()(double x1, double x2) const;

  OrbitalField sample(const Grid& grid) const;

 private:
  int n_;
  int m_;
  int cut_;
  double b_;
  DomainConfig domain_;
  HermiteEvaluator hermite_;
};

OrbitalField finite_volume_orbital(int n, int m, const Grid& grid, const PhysicalConstants& constants,
                                   const DomainConfig& domain, int lattice_cut = 0);

}  // namespace lhf
