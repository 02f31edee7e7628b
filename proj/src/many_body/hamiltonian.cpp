// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/many_body/hamiltonian.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lhf/core/error.hpp"

namespace lhf {

SparseMatrixXcd assemble_hamiltonian(const DeterminantBasis& basis, const VectorXd& energies,
                                     const InteractionTensor& tensor) {
  const int K = basis.K();
  if (energies.size() != K) raise(ErrorCode::DimensionMismatch, "energies has " + std::to_string(energies.size()) + " entries");
  const bool interacting = tensor.K() != 0 && !tensor.is_zero();
  if (interacting && tensor.K() != K) raise(ErrorCode::DimensionMismatch, "tensor K=" + std::to_string(tensor.K()));

  const Eigen::Index dim = basis.size();
  std::vector<std::vector<std::pair<Eigen::Index, cplx>>> columns(static_cast<std::size_t>(dim));

#pragma omp parallel for schedule(dynamic, 16)
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Occupation occ = basis[col];
    auto& entries = columns[std::size_t(col)];
    double diag = 0.0;
    for (Occupation r = occ; r; r &= r - 1) diag += energies(std::countr_zero(r));
    entries.emplace_back(col, cplx(diag));
    if (interacting) {
      const std::vector<int> filled = occupied_indices(occ);
      for (std::size_t i = 0; i < filled.size(); ++i)
        for (std::size_t j = i + 1; j < filled.size(); ++j) {
          const int c = filled[i], d = filled[j];
          // a_d a_c |occ>
          const double s_c = mode_sign(occ, c);
          const Occupation o1 = occ & ~(Occupation(1) << c);
          const double s_d = mode_sign(o1, d);
          const Occupation o2 = o1 & ~(Occupation(1) << d);
          for (int a = 0; a < K; ++a) {
            if (o2 >> a & 1) continue;
            for (int b = a + 1; b < K; ++b) {
              if (o2 >> b & 1) continue;
              const cplx amp = tensor(a, b, c, d) - tensor(a, b, d, c);
              if (amp == 0.0) continue;
              // a+_a a+_b
              const double s_b = mode_sign(o2, b);
              const Occupation o3 = o2 | (Occupation(1) << b);
              const double s_a = mode_sign(o3, a);
              const Occupation o4 = o3 | (Occupation(1) << a);
              entries.emplace_back(basis.index(o4), s_a * s_b * s_c * s_d * amp);
            }
          }
        }
      std::stable_sort(entries.begin(), entries.end(),
                       [](const auto& x, const auto& y) { return x.first < y.first; });
      std::vector<std::pair<Eigen::Index, cplx>> merged;
      for (const auto& e : entries) {
        if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
        else merged.push_back(e);
      }
      entries = std::move(merged);
    }
  }

  SparseMatrixXcd H(dim, dim);
  Eigen::VectorXi nnz(dim);
  for (Eigen::Index c = 0; c < dim; ++c) nnz(c) = int(columns[std::size_t(c)].size());
  H.reserve(nnz);
  for (Eigen::Index c = 0; c < dim; ++c)
    for (const auto& [r, v] : columns[std::size_t(c)]) H.insert(r, c) = v;
  H.makeCompressed();
  return H;
}

double hermiticity_defect(const SparseMatrixXcd& H) {
  const SparseMatrixXcd diff = H - SparseMatrixXcd(H.adjoint());
  double worst = 0.0;
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k)
    for (SparseMatrixXcd::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

}  // namespace lhf
