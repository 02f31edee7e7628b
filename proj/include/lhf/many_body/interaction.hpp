// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "lhf/core/potential.hpp"
#include "lhf/core/types.hpp"
#include "lhf/landau/orbital_set.hpp"

namespace lhf {

/// Dense two-body matrix elements v[a,b,c,d] = <phi_a (x) phi_b | V | phi_c (x) phi_d>.
/// Stored as a K^2 x K^2 matrix with row a K + c and column b K + d, so the
/// pair (a, c) lives on particle one and (b, d) on particle two.
class InteractionTensor {
 public:
  InteractionTensor() = default;
  explicit InteractionTensor(int K) : K_(K), data_(MatrixXcd::Zero(K * K, K * K)) {}
  InteractionTensor(int K, MatrixXcd data);

  int K() const { return K_; }
  cplx operator()(int a, int b, int c, int d) const { return data_(a * K_ + c, b * K_ + d); }
  const MatrixXcd& data() const { return data_; }
  bool is_zero() const { return data_.size() == 0 || data_.cwiseAbs().maxCoeff() == 0.0; }

  /// max |v[a,b,c,d] - v[b,a,d,c]|.
  double exchange_defect() const;
  /// max |v[a,b,c,d] - conj(v[c,d,a,b])|.
  double hermiticity_defect() const;
  /// Average over the exchange and conjugation images.
  InteractionTensor symmetrized() const;

 private:
  int K_ = 0;
  MatrixXcd data_;
};

/// Grid quadrature of conj(phi_a(x)) conj(phi_b(y)) V(x;y) phi_c(x) phi_d(y).
/// The kernel is expanded into separable factors or plane waves first, so
/// the cost is one FFT per orbital pair instead of a double grid sum.
InteractionTensor two_body_tensor(const PotentialSpec& potential, const OrbitalSet& orbitals);

}  // namespace lhf
