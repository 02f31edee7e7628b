// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lhf/core/grid.hpp"
#include "lhf/core/types.hpp"

namespace lhf {

/// V == 0.
struct ZeroKernel {};

/// V(x;y) = strength cos(k.x) cos(k.y), k = 2 pi (p1/L1, p2/L2).
/// p1 = p2 = 0 gives the constant kernel.
struct SeparableCosine {
  double strength = 0.0;
  int p1 = 1;
  int p2 = 0;
};

/// V(x;y) = strength sum over lattice images of exp(-|x - y|^2 / (2 sigma^2)).
struct PeriodicGaussian {
  double strength = 0.0;
  double sigma = 0.5;
};

/// Translation-invariant kernel V(x;y) = W(x - y) tabulated on the grid
/// displacements: table(k1, k2) = W(k1 h1, k2 h2), indices taken mod G.
struct TabulatedKernel {
  MatrixXd table;
  std::string source;
};

/// Rank-one factor of a separable kernel: weight * left(x) * right(y).
struct SeparableTerm {
  cplx weight;
  MatrixXcd left;
  MatrixXcd right;
};

/// Plane-wave factor of a translation-invariant kernel:
/// weight * exp(i q.x) exp(-i q.y), q = 2 pi (j1/L1, j2/L2).
struct FourierMode {
  int j1 = 0;
  int j2 = 0;
  cplx weight;
};

/// Exact factorization of V on grid x grid into sums of products.
struct KernelExpansion {
  std::vector<SeparableTerm> separable;
  std::vector<FourierMode> modes;
};

/// Bounded, doubly periodic, exchange-symmetric two-body kernel bound to a box.
class PotentialSpec {
 public:
  using Kind = std::variant<ZeroKernel, SeparableCosine, PeriodicGaussian, TabulatedKernel>;

  PotentialSpec() = default;
  PotentialSpec(Kind kind, double L1, double L2);

  const Kind& kind() const { return kind_; }
  std::string_view kind_name() const;
  bool is_zero() const;
  double L1() const { return L1_; }
  double L2() const { return L2_; }

  /// V(x;y). Tabulated kernels snap x - y to the nearest grid displacement.
  double operator()(double x1, double x2, double y1, double y2) const;

  /// max |V| over grid x grid.
  double sup_norm(const Grid& grid) const;

  /// max |V(x;y) - V(y;x)| over grid pairs (sampled for analytic kernels,
  /// exhaustive over the table for tabulated ones).
  double symmetry_defect(const Grid& grid, int samples = 4096) const;

  KernelExpansion expansion(const Grid& grid) const;

  /// The kernel multiplied by `factor`.
  PotentialSpec scaled(double factor) const;

 private:
  Kind kind_{ZeroKernel{}};
  double L1_ = 1.0;
  double L2_ = 1.0;
};

/// Reads a whitespace- or comma-separated table of reals (one grid row per line).
MatrixXd read_kernel_table(const std::string& path);

}  // namespace lhf
