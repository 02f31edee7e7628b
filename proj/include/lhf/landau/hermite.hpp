// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace lhf {

/// Normalized Hermite functions h_0..h_max_degree, evaluated by the
/// three-term recurrence
///   h_0 = pi^{-1/4} exp(-z^2/2),  h_1 = sqrt(2) z h_0,
///   h_{n+1} = sqrt(2/(n+1)) z h_n - sqrt(n/(n+1)) h_{n-1}.
class HermiteEvaluator {
 public:
  explicit HermiteEvaluator(int max_degree);

  int max_degree() const { return max_degree_; }

  double operator()(int n, double z) const;

  /// Writes h_0(z) .. h_{max_degree}(z) into `out`.
  void evaluate_all(double z, double* out) const;

 private:
  int max_degree_;
};

double hermite_function(int n, double z);

/// Smallest z beyond the classical turning point sqrt(2n+1) with
/// |h_n(z)| < rel_tol * max |h_n|. The decay is monotone past that point.
double hermite_tail(int n, double rel_tol = 1e-14);

}  // namespace lhf
