// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/analysis/error_bounds.hpp"

#include <cmath>
#include <sstream>

#include "lhf/core/error.hpp"
#include "lhf/many_body/slater.hpp"

namespace lhf {

double error_norm(const VectorXcd& exact, const HFState& hf, const DeterminantBasis& basis) {
  if (exact.size() != basis.size())
    raise(ErrorCode::DimensionMismatch, "state length " + std::to_string(exact.size()) + " vs " + std::to_string(basis.size()));
  return (exact - embed_slater(hf.a, hf.orbitals, basis)).norm();
}

double apriori_bound(int N, double v_norm, const PhysicalConstants& constants, double t) {
  if (!(t >= 0.0)) raise(ErrorCode::InvalidValue, "t");
  if (N < 1) raise(ErrorCode::InvalidValue, "N");
  return std::sqrt(double(N) * (N - 1)) * v_norm * t / constants.hbar();
}

VectorXcd wedge_coefficients(const MatrixXcd& orbitals, const DeterminantBasis& basis) {
  const int N = basis.N();
  if (orbitals.rows() != basis.K() || orbitals.cols() != N) raise(ErrorCode::DimensionMismatch, "orbital matrix shape");
  VectorXcd out(basis.size());
#pragma omp parallel
  {
    MatrixXcd sub(N, N);
#pragma omp for schedule(static)
    for (Eigen::Index d = 0; d < basis.size(); ++d) {
      int r = 0;
      for (Occupation occ = basis[d]; occ; occ &= occ - 1) sub.row(r++) = orbitals.row(std::countr_zero(occ));
      out(d) = sub.partialPivLu().determinant();
    }
  }
  return out;
}

std::array<double, 4> replacement_sectors(const VectorXcd& x, const MatrixXcd& orbitals, const DeterminantBasis& basis) {
  const int K = basis.K(), N = basis.N();
  // Unitary Q whose first N columns are the orbitals.
  MatrixXcd Q(K, K);
  Q.leftCols(N) = orbitals;
  if (K > N) {
    const MatrixXcd full = Eigen::HouseholderQR<MatrixXcd>(orbitals).householderQ();
    Q.rightCols(K - N) = full.rightCols(K - N);
  }
  // y_{D'} = sum_D conj(det Q[D, D']) x_D: coefficients in the rotated basis.
  VectorXd sq(basis.size());
  std::vector<int> sector(static_cast<std::size_t>(basis.size()));
  const Occupation inside = N >= 64 ? ~Occupation(0) : (Occupation(1) << N) - 1;
#pragma omp parallel
  {
    MatrixXcd cols(K, N);
#pragma omp for schedule(static)
    for (Eigen::Index dp = 0; dp < basis.size(); ++dp) {
      int c = 0;
      for (Occupation occ = basis[dp]; occ; occ &= occ - 1) cols.col(c++) = Q.col(std::countr_zero(occ));
      const cplx y = wedge_coefficients(cols, basis).dot(x);
      sq(dp) = std::norm(y);
      sector[std::size_t(dp)] = std::popcount(basis[dp] & ~inside);
    }
  }
  std::array<double, 4> out{};
  for (Eigen::Index dp = 0; dp < basis.size(); ++dp) out[std::size_t(std::min(sector[std::size_t(dp)], 3))] += sq(dp);
  for (double& s : out) s = std::sqrt(s);
  return out;
}

Defect defect(const HFState& state, const SparseMatrixXcd& H, const DeterminantBasis& basis, const HFModel& model,
              double tolerance) {
  const int N = state.N();
  const HFDerivative d = hf_rhs(state, model);
  const VectorXcd wedge = wedge_coefficients(state.orbitals, basis);
  VectorXcd du = d.a_dot * wedge;
  for (int l = 0; l < N; ++l) {
    MatrixXcd replaced = state.orbitals;
    replaced.col(l) = d.orbitals_dot.col(l);
    du += state.a * wedge_coefficients(replaced, basis);
  }
  const cplx ihbar = kI * model.constants.hbar();
  Defect out;
  out.vector = du - (H * (state.a * wedge)) / ihbar;
  out.norm = out.vector.norm();
  out.sectors = replacement_sectors(out.vector, state.orbitals, basis);
  const double leak = std::max({out.sectors[0], out.sectors[1], out.sectors[3]});
  if (leak > tolerance) {
    std::ostringstream msg;
    msg << "sector norms 0:" << out.sectors[0] << " 1:" << out.sectors[1] << " >=3:" << out.sectors[3];
    raise(ErrorCode::SupportViolation, msg.str());
  }
  return out;
}

double defect_norm(const HFState& state, const SparseMatrixXcd& H, const DeterminantBasis& basis,
                   const HFModel& model) {
  return defect(state, H, basis, model).norm;
}

double ScalingConfig::bound(double v_norm, double t) const {
  return apriori_bound(base.N, v_norm / base.N, constants, t);
}

double ScalingConfig::analytic_bound(double v_norm, double t) const {
  return std::sqrt(double(base.N - 1)) * v_norm * t / base.constants.hbar();
}

ScalingConfig rescale_mean_field(const SimulationConfig& config) {
  if (config.N < 1) raise(ErrorCode::InvalidValue, "N");
  ScalingConfig s;
  s.base = config;
  s.constants = config.constants.with_hbar(config.constants.hbar() / std::sqrt(double(config.N)));
  s.potential = config.potential.scaled(1.0 / config.N);
  return s;
}

}  // namespace lhf
