// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/many_body/ground_state.hpp"

#include <string>

#include "lhf/core/error.hpp"

namespace lhf {

FillingSpec::FillingSpec(int N_, int M_) : N(N_), M(M_) {
  if (M < 1) raise(ErrorCode::InvalidValue, "M");
  if (N < 1) raise(ErrorCode::InvalidValue, "N");
}

GroundState noninteracting_ground_state(const FillingSpec& filling, const VectorXd& energies) {
  const int M = filling.M;
  if (energies.size() % M != 0) raise(ErrorCode::DimensionMismatch, "energies not a multiple of M");
  const int levels = int(energies.size() / M);
  const int filled = filling.filled_levels();
  const int r = filling.r();
  const int needed = filled + (r > 0 ? 1 : 0);
  if (needed > levels)
    raise(ErrorCode::TruncationTooSmall,
          "N=" + std::to_string(filling.N) + " needs n_max >= " + std::to_string(needed - 1));
  if (energies.size() > 64) raise(ErrorCode::TooLarge, "more than 64 orbitals");

  GroundState gs;
  gs.nu = filling.nu();
  gs.r = r;
  for (int n = 0; n < filled; ++n) gs.energy += M * energies(n * M);
  if (r > 0) gs.energy += r * energies(filled * M);

  Occupation core = 0;
  for (int k = 0; k < filled * M; ++k) core |= Occupation(1) << k;
  if (r == 0) {
    gs.occupations.push_back(core);
  } else {
    const DeterminantBasis open(M, r);
    for (Eigen::Index i = 0; i < open.size(); ++i) gs.occupations.push_back(core | (open[i] << (filled * M)));
  }
  gs.degeneracy = long(gs.occupations.size());
  return gs;
}

}  // namespace lhf
