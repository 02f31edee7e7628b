// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/landau/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lhf/core/error.hpp"

namespace lhf {

HermiteEvaluator::HermiteEvaluator(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0) raise(ErrorCode::DegreeOutOfRange, "max_degree=" + std::to_string(max_degree));
}

void HermiteEvaluator::evaluate_all(double z, double* out) const {
  const double h0 = std::exp(-0.5 * z * z) / std::sqrt(std::sqrt(std::numbers::pi));
  out[0] = h0;
  if (max_degree_ == 0) return;
  out[1] = std::numbers::sqrt2 * z * h0;
  for (int n = 1; n < max_degree_; ++n)
    out[n + 1] = std::sqrt(2.0 / (n + 1)) * z * out[n] - std::sqrt(double(n) / (n + 1)) * out[n - 1];
}

double HermiteEvaluator::operator()(int n, double z) const {
  if (n < 0 || n > max_degree_)
    raise(ErrorCode::DegreeOutOfRange, "n=" + std::to_string(n) + " max=" + std::to_string(max_degree_));
  double prev = std::exp(-0.5 * z * z) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n == 0) return prev;
  double cur = std::numbers::sqrt2 * z * prev;
  for (int k = 1; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * z * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_function(int n, double z) {
  if (n < 0) raise(ErrorCode::DegreeOutOfRange, "n=" + std::to_string(n));
  return HermiteEvaluator(n)(n, z);
}

double hermite_tail(int n, double rel_tol) {
  const HermiteEvaluator h(std::max(n, 0));
  const double turning = std::sqrt(2.0 * n + 1.0);
  double peak = 0.0;
  for (double z = 0.0; z <= turning + 1.0; z += 1e-3) peak = std::max(peak, std::abs(h(n, z)));
  double z = turning;
  while (std::abs(h(n, z)) >= rel_tol * peak) z += 1e-2;
  return z;
}

}  // namespace lhf
