// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/many_body/propagate.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "lhf/core/error.hpp"

namespace lhf {
namespace {

constexpr int kMaxKrylov = 40;

}  // namespace

Propagator::Propagator(SparseMatrixXcd H, double hbar, Eigen::Index dense_limit, double tolerance)
    : H_(std::move(H)), hbar_(hbar), tolerance_(tolerance), dense_(H_.rows() <= dense_limit) {
  if (H_.rows() != H_.cols()) raise(ErrorCode::DimensionMismatch, "H is not square");
  if (!(hbar > 0.0)) raise(ErrorCode::InvalidValue, "hbar");
  if (dense_) {
    const MatrixXcd dense = MatrixXcd(H_);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success) raise(ErrorCode::ConvergenceFailure, "dense eigensolver");
    eigenvectors_ = solver.eigenvectors();
    eigenvalues_ = solver.eigenvalues();
  }
}

VectorXcd Propagator::apply(const VectorXcd& psi, double t) const {
  if (psi.size() != dim()) raise(ErrorCode::DimensionMismatch, "state length " + std::to_string(psi.size()));
  if (t == 0.0) return psi;
  if (!dense_) return krylov(psi, t);
  VectorXcd c = eigenvectors_.adjoint() * psi;
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::polar(1.0, -eigenvalues_(k) * t / hbar_);
  return eigenvectors_ * c;
}

VectorXcd Propagator::krylov(const VectorXcd& psi, double t) const {
  const Eigen::Index n = dim();
  VectorXcd w = psi;
  double remaining = t;
  double tau = t;
  const double sign = t < 0 ? -1.0 : 1.0;
  while (std::abs(remaining) > 0.0) {
    const double beta0 = w.norm();
    if (beta0 == 0.0) return w;
    // Lanczos with full reorthogonalization.
    std::vector<VectorXcd> V{w / beta0};
    std::vector<double> alpha, beta;
    bool exhausted = false;
    for (int j = 0; j < kMaxKrylov && j < n; ++j) {
      VectorXcd u = H_ * V[j];
      alpha.push_back(V[j].dot(u).real());
      for (int pass = 0; pass < 2; ++pass)
        for (const VectorXcd& v : V) u -= v * v.dot(u);
      const double b = u.norm();
      beta.push_back(b);
      if (b < 1e-14 * (1.0 + std::abs(alpha.back()))) {
        exhausted = true;
        break;
      }
      V.push_back(u / b);
    }
    const int m = int(alpha.size());
    MatrixXd T = MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      T(j, j) = alpha[j];
      if (j + 1 < m) T(j, j + 1) = T(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> small(T);
    tau = sign * std::min(std::abs(tau), std::abs(remaining));
    VectorXcd y;
    while (true) {
      VectorXcd e = small.eigenvectors().row(0).transpose().cast<cplx>();
      for (int k = 0; k < m; ++k) e(k) *= std::polar(1.0, -small.eigenvalues()(k) * tau / hbar_);
      y = small.eigenvectors().cast<cplx>() * e;
      const double err = exhausted ? 0.0 : beta0 * beta.back() * std::abs(y(m - 1));
      if (err <= tolerance_) break;
      tau *= 0.5;
      if (std::abs(tau) < 1e-12 * std::abs(t)) {
        std::ostringstream msg;
        msg << "Krylov residual " << err << " above " << tolerance_;
        raise(ErrorCode::ConvergenceFailure, msg.str());
      }
    }
    VectorXcd next = VectorXcd::Zero(n);
    for (int k = 0; k < m; ++k) next += V[k] * y(k);
    w = beta0 * next;
    remaining -= tau;
    if (std::abs(remaining) < 1e-15 * std::abs(t)) break;
  }
  return w;
}

VectorXcd evolve_exact(const VectorXcd& psi, const SparseMatrixXcd& H, double t, const PhysicalConstants& constants) {
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "state norm " << psi.norm();
    raise(ErrorCode::PreconditionFailed, msg.str());
  }
  return Propagator(H, constants.hbar()).apply(psi, t);
}

double expectation(const SparseMatrixXcd& H, const VectorXcd& psi) { return psi.dot(H * psi).real(); }

}  // namespace lhf
