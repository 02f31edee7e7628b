// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "lhf/core/error.hpp"
#include "lhf/hartree_fock/hartree_fock.hpp"
#include "lhf/many_body/slater.hpp"

namespace lhf {
namespace {

bool finite(const HFState& s) {
  return std::isfinite(s.a.real()) && std::isfinite(s.a.imag()) && s.orbitals.allFinite();
}

HFState advance(const HFState& s, const HFDerivative& d, double h) {
  HFState out = s;
  out.a += h * d.a_dot;
  out.orbitals += h * d.orbitals_dot;
  return out;
}

double slater_norm(const HFState& s) {
  const MatrixXcd g = s.orbitals.adjoint() * s.orbitals;
  return std::abs(s.a) * std::sqrt(std::abs(g.partialPivLu().determinant()));
}

}  // namespace

HFState gauge_transform(const HFState& state, const MatrixXcd& U) {
  if (U.rows() != state.N() || U.cols() != state.N()) raise(ErrorCode::DimensionMismatch, "U must be N x N");
  const double dev = (U.adjoint() * U - MatrixXcd::Identity(U.rows(), U.cols())).norm();
  if (dev > 1e-10) {
    std::ostringstream msg;
    msg << "|U^dagger U - I| = " << dev;
    raise(ErrorCode::NotUnitary, msg.str());
  }
  HFState out = state;
  out.orbitals = state.orbitals * U;
  out.a = state.a / U.partialPivLu().determinant();
  return out;
}

HFState reorthonormalize(const HFState& state) {
  const MatrixXcd S = state.orbitals.adjoint() * state.orbitals;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(S);
  const VectorXd lambda = eig.eigenvalues();
  if (lambda.minCoeff() <= 0.0) raise(ErrorCode::StepUnstable, "orbitals became linearly dependent");
  const MatrixXcd inv_sqrt = eig.eigenvectors() * lambda.cwiseInverse().cwiseSqrt().cast<cplx>().asDiagonal() *
                             eig.eigenvectors().adjoint();
  HFState out = state;
  out.orbitals = state.orbitals * inv_sqrt;
  out.a = state.a * std::sqrt(lambda.prod());
  return out;
}

HFState rk4_step(const HFState& s, double h, const HFModel& model) {
  const HFDerivative k1 = hf_rhs(s, model);
  const HFDerivative k2 = hf_rhs(advance(s, k1, 0.5 * h), model);
  const HFDerivative k3 = hf_rhs(advance(s, k2, 0.5 * h), model);
  const HFDerivative k4 = hf_rhs(advance(s, k3, h), model);
  HFState out = s;
  out.t = s.t + h;
  out.a += (h / 6.0) * (k1.a_dot + 2.0 * k2.a_dot + 2.0 * k3.a_dot + k4.a_dot);
  out.orbitals += (h / 6.0) * (k1.orbitals_dot + 2.0 * k2.orbitals_dot + 2.0 * k3.orbitals_dot + k4.orbitals_dot);
  return out;
}

HFTrajectory integrate_hf(const HFState& initial, double dt, double t_final, Scheme scheme, const HFModel& model,
                          int sample_every, const StepObserver& observer) {
  if (!(dt > 0.0)) raise(ErrorCode::InvalidValue, "dt");
  if (!(t_final >= 0.0)) raise(ErrorCode::InvalidValue, "t_final");
  if (sample_every < 1) raise(ErrorCode::InvalidValue, "sample_every");
  if (!finite(initial)) raise(ErrorCode::NonFiniteValue, "initial state");

  HFTrajectory traj;
  auto record = [&](const HFState& s) {
    traj.samples.push_back({s, hf_energy(s, model), slater_norm(s), orthonormality_defect(s.orbitals)});
  };

  const long steps = t_final == 0.0 ? 0 : long(std::ceil(t_final / dt - 1e-9));
  HFState state = initial;
  const double t0 = initial.t;
  double drift = orthonormality_defect(state.orbitals);
  record(state);
  if (observer) observer(state);
  for (long k = 1; k <= steps; ++k) {
    const double t_next = k == steps ? t0 + t_final : t0 + k * dt;
    HFState next = rk4_step(state, t_next - state.t, model);
    next.t = t_next;
    if (!finite(next)) raise(ErrorCode::NonFiniteValue, "step " + std::to_string(k));
    const double d = orthonormality_defect(next.orbitals);
    traj.max_step_drift = std::max(traj.max_step_drift, d - drift);
    if (d - drift > 1e-3) {
      std::ostringstream msg;
      msg << "orthonormality drift " << d - drift << " in step " << k;
      raise(ErrorCode::StepUnstable, msg.str());
    }
    if (scheme == Scheme::Rk4Reorth) next = reorthonormalize(next);
    state = std::move(next);
    drift = orthonormality_defect(state.orbitals);
    if (observer) observer(state);
    if (k % sample_every == 0 || k == steps) record(state);
  }
  return traj;
}

}  // namespace lhf
