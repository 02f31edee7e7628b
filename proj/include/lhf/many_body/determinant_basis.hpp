// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "lhf/core/types.hpp"

namespace lhf {

using Occupation = std::uint64_t;

/// Occupied single-particle indices of `occ`, ascending.
std::vector<int> occupied_indices(Occupation occ);

/// Fermionic sign of moving an operator on mode `p` past the occupied modes below it.
inline double mode_sign(Occupation occ, int p) {
  return (std::popcount(occ & ((Occupation(1) << p) - 1)) & 1) ? -1.0 : 1.0;
}

/// All N-subsets of K single-particle modes, as bitmasks in lexicographic
/// order of their ascending index tuples.
class DeterminantBasis {
 public:
  static constexpr std::size_t kDefaultCap = 200000;

  DeterminantBasis(int K, int N, std::size_t cap = kDefaultCap);

  int K() const { return K_; }
  int N() const { return N_; }
  Eigen::Index size() const { return Eigen::Index(states_.size()); }
  Occupation operator[](Eigen::Index i) const { return states_[std::size_t(i)]; }
  const std::vector<Occupation>& states() const { return states_; }

  /// Position of `occ`; -1 when it is not an N-subset of the K modes.
  Eigen::Index index(Occupation occ) const;

 private:
  int K_;
  int N_;
  std::vector<Occupation> states_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

/// C(K, N) as a double, for size checks before enumeration.
double binomial(int K, int N);

DeterminantBasis enumerate_determinants(int K, int N, std::size_t cap = DeterminantBasis::kDefaultCap);

}  // namespace lhf
