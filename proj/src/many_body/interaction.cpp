// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/many_body/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "core/fft.hpp"
#include "lhf/core/error.hpp"

namespace lhf {
namespace {

// Permutation matrix image: entry (a K + c, b K + d) -> (c K + a, d K + b).
MatrixXcd swap_pairs(const MatrixXcd& m, int K) {
  MatrixXcd out(m.rows(), m.cols());
  for (int b = 0; b < K; ++b)
    for (int d = 0; d < K; ++d)
      for (int a = 0; a < K; ++a)
        for (int c = 0; c < K; ++c) out(c * K + a, d * K + b) = m(a * K + c, b * K + d);
  return out;
}

}  // namespace

InteractionTensor::InteractionTensor(int K, MatrixXcd data) : K_(K), data_(std::move(data)) {
  if (data_.rows() != K * K || data_.cols() != K * K) raise(ErrorCode::DimensionMismatch, "tensor shape");
}

double InteractionTensor::exchange_defect() const {
  if (data_.size() == 0) return 0.0;
  return (data_ - data_.transpose()).cwiseAbs().maxCoeff();
}

double InteractionTensor::hermiticity_defect() const {
  if (data_.size() == 0) return 0.0;
  return (data_ - swap_pairs(data_, K_).conjugate()).cwiseAbs().maxCoeff();
}

InteractionTensor InteractionTensor::symmetrized() const {
  MatrixXcd s = 0.5 * (data_ + data_.transpose());
  s = 0.5 * (s + swap_pairs(s, K_).conjugate());
  return InteractionTensor(K_, std::move(s));
}

InteractionTensor two_body_tensor(const PotentialSpec& potential, const OrbitalSet& orbitals) {
  const Grid& grid = orbitals.grid();
  const int K = orbitals.size();
  const Eigen::Index P = Eigen::Index(K) * K;
  if (potential.L1() != grid.L1() || potential.L2() != grid.L2())
    raise(ErrorCode::GridMismatch, "potential box differs from the orbital grid");
  InteractionTensor zero(K);
  if (potential.is_zero()) return zero;

  const double scale = std::max(1.0, potential.sup_norm(grid));
  if (const double asym = potential.symmetry_defect(grid); asym > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "V(x;y) - V(y;x) reaches " << asym;
    raise(ErrorCode::SymmetryViolation, msg.str());
  }

  const KernelExpansion expansion = potential.expansion(grid);
  const double w = grid.weight();
  MatrixXcd data = MatrixXcd::Zero(P, P);

  auto density = [&](int a, int c) -> MatrixXcd {
    return orbitals[a].values.conjugate().cwiseProduct(orbitals[c].values);
  };

  for (const SeparableTerm& term : expansion.separable) {
    VectorXcd left(P), right(P);
#pragma omp parallel for schedule(static)
    for (Eigen::Index p = 0; p < P; ++p) {
      const MatrixXcd rho = density(int(p / K), int(p % K));
      left(p) = w * rho.cwiseProduct(term.left).sum();
      right(p) = w * rho.cwiseProduct(term.right).sum();
    }
    data.noalias() += term.weight * left * right.transpose();
  }

  if (!expansion.modes.empty()) {
    const Eigen::Index Q = Eigen::Index(expansion.modes.size());
    const double x10 = grid.x1(0), x20 = grid.x2(0);
    // plus(p, q) = integral of rho_p exp(+i q.x), minus(p, q) the same at -q.
    MatrixXcd plus(P, Q), minus(P, Q);
    VectorXcd weights(Q);
    for (Eigen::Index q = 0; q < Q; ++q) weights(q) = expansion.modes[std::size_t(q)].weight;
#pragma omp parallel for schedule(static)
    for (Eigen::Index p = 0; p < P; ++p) {
      const MatrixXcd f = detail::fft2(density(int(p / K), int(p % K)), false);
      for (Eigen::Index q = 0; q < Q; ++q) {
        const FourierMode& mode = expansion.modes[std::size_t(q)];
        const double q1 = 2.0 * std::numbers::pi * mode.j1 / grid.L1();
        const double q2 = 2.0 * std::numbers::pi * mode.j2 / grid.L2();
        const cplx phase = std::polar(w, q1 * x10 + q2 * x20);
        plus(p, q) = phase * f(detail::frequency_bin(mode.j1, grid.G1()), detail::frequency_bin(mode.j2, grid.G2()));
        minus(p, q) = std::conj(phase) * f(detail::frequency_bin(-mode.j1, grid.G1()),
                                           detail::frequency_bin(-mode.j2, grid.G2()));
      }
    }
    data.noalias() += plus * weights.asDiagonal() * minus.transpose();
  }

  InteractionTensor raw(K, std::move(data));
  const double vmax = std::max(1.0, raw.data().cwiseAbs().maxCoeff());
  const double dev = std::max(raw.exchange_defect(), raw.hermiticity_defect());
  if (dev > 1e-8 * vmax) {
    std::ostringstream msg;
    msg << "tensor symmetry deviation " << dev;
    raise(ErrorCode::SymmetryViolation, msg.str());
  }
  return raw.symmetrized();
}

}  // namespace lhf
