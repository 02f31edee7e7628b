// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "lhf/core/constants.hpp"
#include "lhf/core/types.hpp"

namespace lhf {

/// Uniform midpoint grid on the box: point (i, j) sits at
/// x1 = -L1/2 + (i + 1/2) L1/G1, x2 = -L2/2 + (j + 1/2) L2/G2.
class Grid {
 public:
  Grid() = default;
  Grid(int G1, int G2, double L1, double L2);
  Grid(int G1, int G2, const DomainConfig& domain)
      : Grid(G1, G2, domain.L1, domain.L2) {}

  int G1() const { return G1_; }
  int G2() const { return G2_; }
  double L1() const { return L1_; }
  double L2() const { return L2_; }
  double h1() const { return L1_ / G1_; }
  double h2() const { return L2_ / G2_; }
  Eigen::Index size() const { return Eigen::Index(G1_) * G2_; }
  double x1(int i) const { return -0.5 * L1_ + (i + 0.5) * h1(); }
  double x2(int j) const { return -0.5 * L2_ + (j + 0.5) * h2(); }
  /// Uniform quadrature weight; the weights sum to L1 L2.
  double weight() const { return L1_ * L2_ / (double(G1_) * G2_); }

  /// Same grid with both point counts doubled.
  Grid refined() const { return Grid(2 * G1_, 2 * G2_, L1_, L2_); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int G1_ = 0;
  int G2_ = 0;
  double L1_ = 0.0;
  double L2_ = 0.0;
};

/// Landau quantum numbers of a basis orbital.
struct OrbitalLabel {
  int n = 0;
  int m = 0;
  friend bool operator==(const OrbitalLabel&, const OrbitalLabel&) = default;
};

/// Complex samples of a single-particle wave function on a Grid. Row i,
/// column j holds the value at (x1_i, x2_j).
struct OrbitalField {
  Grid grid;
  MatrixXcd values;
  std::optional<OrbitalLabel> label;

  OrbitalField() = default;
  OrbitalField(Grid g, MatrixXcd v, std::optional<OrbitalLabel> l = std::nullopt);

  /// Samples `fn(x1, x2)` at every grid point.
  template <typename Fn>
  static OrbitalField sample(const Grid& grid, Fn&& fn) {
    MatrixXcd v(grid.G1(), grid.G2());
    for (int j = 0; j < grid.G2(); ++j)
      for (int i = 0; i < grid.G1(); ++i) v(i, j) = cplx(fn(grid.x1(i), grid.x2(j)));
    return OrbitalField(grid, std::move(v));
  }
};

/// Midpoint-rule L2(box) inner product, conjugate-linear in `f`.
cplx inner_product(const OrbitalField& f, const OrbitalField& g);

/// Same quadrature on raw sample matrices sharing `grid`.
template <typename DerivedF, typename DerivedG>
cplx inner_product(const Eigen::MatrixBase<DerivedF>& f,
                   const Eigen::MatrixBase<DerivedG>& g, const Grid& grid) {
  return f.conjugate().cwiseProduct(g).sum() * grid.weight();
}

double l2_norm(const OrbitalField& f);

}  // namespace lhf
