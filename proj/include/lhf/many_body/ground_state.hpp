// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lhf/core/types.hpp"
#include "lhf/many_body/determinant_basis.hpp"

namespace lhf {

/// N = filled M + r with 0 <= r < M. The highest completely filled level
/// is nu = filled - 1, which is -1 when N < M.
struct FillingSpec {
  int N = 0;
  int M = 0;

  FillingSpec(int N, int M);

  int filled_levels() const { return N / M; }
  int nu() const { return filled_levels() - 1; }
  int r() const { return N % M; }
};

struct GroundState {
  double energy = 0.0;
  int nu = 0;
  int r = 0;
  long degeneracy = 0;
  /// Every minimizing occupation, lexicographic.
  std::vector<Occupation> occupations;
};

/// Levels 0..nu filled and r of the M states of level nu+1 occupied:
/// E = M sum_{n <= nu} E_n + r E_{nu+1}, degeneracy C(M, r).
/// `energies` lists E_n per orbital in (n, m) order, so the level of
/// orbital k is k / M.
GroundState noninteracting_ground_state(const FillingSpec& filling, const VectorXd& energies);

}  // namespace lhf
