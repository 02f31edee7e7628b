// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "lhf/core/error.hpp"
#include "lhf/hartree_fock/hartree_fock.hpp"

namespace lhf {
namespace {

void check_shape(const MatrixXcd& orbitals, const InteractionTensor& tensor) {
  if (tensor.K() != orbitals.rows())
    raise(ErrorCode::DimensionMismatch, "tensor K=" + std::to_string(tensor.K()) + " vs " + std::to_string(orbitals.rows()));
}

MatrixXcd projector_without(const MatrixXcd& orbitals, int l) {
  if (l < 0 || l >= orbitals.cols())
    raise(ErrorCode::IndexOutOfRange, "l=" + std::to_string(l) + " with N=" + std::to_string(orbitals.cols()));
  MatrixXcd rho = MatrixXcd::Zero(orbitals.rows(), orbitals.rows());
  for (Eigen::Index k = 0; k < orbitals.cols(); ++k)
    if (k != l) rho.noalias() += orbitals.col(k) * orbitals.col(k).adjoint();
  return rho;
}

}  // namespace

MatrixXcd direct_matrix(const InteractionTensor& tensor, const MatrixXcd& rho) {
  const int K = tensor.K();
  VectorXcd r(K * K);
  for (int b = 0; b < K; ++b)
    for (int d = 0; d < K; ++d) r(b * K + d) = rho(d, b);
  const VectorXcd j = tensor.data() * r;
  MatrixXcd J(K, K);
  for (int a = 0; a < K; ++a)
    for (int c = 0; c < K; ++c) J(a, c) = j(a * K + c);
  return J;
}

MatrixXcd exchange_matrix(const InteractionTensor& tensor, const MatrixXcd& rho) {
  const int K = tensor.K();
  const MatrixXcd& v = tensor.data();
  MatrixXcd X(K, K);
#pragma omp parallel for schedule(static)
  for (int a = 0; a < K; ++a)
    for (int d = 0; d < K; ++d) {
      cplx sum = 0.0;
      for (int b = 0; b < K; ++b)
        for (int c = 0; c < K; ++c) sum += v(a * K + c, b * K + d) * rho(c, b);
      X(a, d) = sum;
    }
  return X;
}

VectorXcd direct_potential_action(const MatrixXcd& orbitals, const InteractionTensor& tensor, int l) {
  check_shape(orbitals, tensor);
  const MatrixXcd rho = projector_without(orbitals, l);
  return direct_matrix(tensor, rho) * orbitals.col(l);
}

VectorXcd exchange_potential_action(const MatrixXcd& orbitals, const InteractionTensor& tensor, int l) {
  check_shape(orbitals, tensor);
  const MatrixXcd rho = projector_without(orbitals, l);
  return exchange_matrix(tensor, rho) * orbitals.col(l);
}

MatrixXcd fock_matrix(const MatrixXcd& orbitals, const HFModel& model) {
  if (model.energies.size() != orbitals.rows()) raise(ErrorCode::DimensionMismatch, "energies");
  MatrixXcd F = model.energies.cast<cplx>().asDiagonal();
  if (model.tensor.is_zero()) return F;
  check_shape(orbitals, model.tensor);
  const MatrixXcd rho = orbitals * orbitals.adjoint();
  F += direct_matrix(model.tensor, rho) - exchange_matrix(model.tensor, rho);
  return F;
}

HFDerivative hf_rhs(const HFState& state, const HFModel& model) {
  const MatrixXcd F = fock_matrix(state.orbitals, model);
  const MatrixXcd action = F * state.orbitals;  // i hbar dphi/dt
  const cplx ihbar = kI * model.constants.hbar();
  const cplx expectation = (state.orbitals.adjoint() * action).trace();
  return {(state.E0 - expectation) * state.a / ihbar, action / ihbar};
}

double hf_energy(const HFState& state, const HFModel& model) {
  const MatrixXcd& C = state.orbitals;
  const MatrixXcd rho = C * C.adjoint();
  double e = (model.energies.cast<cplx>().asDiagonal() * rho).trace().real();
  if (!model.tensor.is_zero()) {
    check_shape(C, model.tensor);
    e += 0.5 * ((direct_matrix(model.tensor, rho) - exchange_matrix(model.tensor, rho)) * rho).trace().real();
  }
  return std::norm(state.a) * e;
}

HFState make_hf_state(cplx a, MatrixXcd orbitals, const HFModel& model) {
  HFState s;
  s.a = a;
  s.orbitals = std::move(orbitals);
  s.E0 = hf_energy(HFState{0.0, cplx(1.0), s.orbitals, 0.0}, model);
  return s;
}

}  // namespace lhf
