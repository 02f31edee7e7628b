// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/landau/operators.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lhf/core/error.hpp"

namespace lhf {
namespace {

long grid_steps(double a, double h, const char* axis) {
  const double s = a / h;
  const double r = std::round(s);
  if (std::abs(s - r) > 1e-9 * std::max(1.0, std::abs(s)))
    raise(ErrorCode::OffGridDisplacement, std::string(axis) + " shift " + std::to_string(a));
  return long(r);
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Value at grid column j, row i + di (any integer), folded back into the box.
cplx wrapped(const MatrixXcd& v, long i, int j, const std::vector<cplx>& wrap_phase) {
  const long G1 = v.rows();
  const long k = floor_div(i, G1);
  const cplx f = v(i - k * G1, j);
  if (k == 0) return f;
  return std::pow(wrap_phase[j], int(k)) * f;
}

// Weights extrapolating samples at t = 1/2, 3/2, ... to t = 0.
std::vector<double> boundary_weights(int points) {
  std::vector<double> w(points);
  for (int k = 0; k < points; ++k) {
    double num = 1.0, den = 1.0;
    for (int l = 0; l < points; ++l) {
      if (l == k) continue;
      num *= -(l + 0.5);
      den *= (k + 0.5) - (l + 0.5);
    }
    w[k] = num / den;
  }
  return w;
}

}  // namespace

OrbitalField magnetic_translate(const OrbitalField& field, double a1, double a2, const PhysicalConstants& constants) {
  const Grid& g = field.grid;
  const long s1 = grid_steps(a1, g.h1(), "x1");
  const long s2 = grid_steps(a2, g.h2(), "x2");
  const double b = constants.b();
  std::vector<cplx> wrap_phase(g.G2());
  for (int j = 0; j < g.G2(); ++j) wrap_phase[j] = std::polar(1.0, b * g.L1() * g.x2(j));
  MatrixXcd out(g.G1(), g.G2());
  for (int j = 0; j < g.G2(); ++j) {
    const long jj = j + s2;
    const int src_j = int(jj - floor_div(jj, g.G2()) * g.G2());
    // x2 + a2 lands on column src_j; the wrap phase is L2-periodic in x2.
    const cplx phase = std::polar(1.0, -b * a1 * g.x2(j));
    for (int i = 0; i < g.G1(); ++i) out(i, j) = phase * wrapped(field.values, i + s1, src_j, wrap_phase);
  }
  return OrbitalField(g, std::move(out), field.label);
}

OrbitalField apply_landau_hamiltonian(const OrbitalField& field, const PhysicalConstants& constants) {
  const Grid& g = field.grid;
  const double b = constants.b();
  const double ell = 1.0 / std::sqrt(b);
  if (g.h1() > ell / 8.0 || g.h2() > ell / 8.0)
    raise(ErrorCode::GridTooCoarse, "spacing " + std::to_string(std::max(g.h1(), g.h2())) +
                                        " exceeds magnetic length / 8 = " + std::to_string(ell / 8.0));
  if (g.G1() < 5 || g.G2() < 5) raise(ErrorCode::GridTooCoarse, "stencil needs 5 points per axis");
  std::vector<cplx> wrap_phase(g.G2());
  for (int j = 0; j < g.G2(); ++j) wrap_phase[j] = std::polar(1.0, b * g.L1() * g.x2(j));
  const MatrixXcd& f = field.values;
  const double h1 = g.h1(), h2 = g.h2();
  const double c = constants.hbar() * constants.hbar() / (2.0 * constants.mass());
  const int G2 = g.G2();
  MatrixXcd out(g.G1(), G2);
  for (int j = 0; j < G2; ++j) {
    const int jm2 = (j - 2 + G2) % G2, jm1 = (j - 1 + G2) % G2, jp1 = (j + 1) % G2, jp2 = (j + 2) % G2;
    for (int i = 0; i < g.G1(); ++i) {
      const cplx f0 = f(i, j);
      const cplx d11 = (-wrapped(f, i - 2, j, wrap_phase) + 16.0 * wrapped(f, i - 1, j, wrap_phase) - 30.0 * f0 +
                        16.0 * wrapped(f, i + 1, j, wrap_phase) - wrapped(f, i + 2, j, wrap_phase)) /
                       (12.0 * h1 * h1);
      const cplx d22 = (-f(i, jm2) + 16.0 * f(i, jm1) - 30.0 * f0 + 16.0 * f(i, jp1) - f(i, jp2)) / (12.0 * h2 * h2);
      const cplx d2 = (f(i, jm2) - 8.0 * f(i, jm1) + 8.0 * f(i, jp1) - f(i, jp2)) / (12.0 * h2);
      const double x1 = g.x1(i);
      out(i, j) = c * (-d11 - d22 + 2.0 * kI * b * x1 * d2 + b * b * x1 * x1 * f0);
    }
  }
  return OrbitalField(g, std::move(out), field.label);
}

BcResidual check_magnetic_bc(const OrbitalField& field, int M) {
  const Grid& g = field.grid;
  const MatrixXcd& f = field.values;
  BcResidual r;
  const int p1 = std::min(10, g.G1());
  const std::vector<double> w1 = boundary_weights(p1);
  for (int j = 0; j < g.G2(); ++j) {
    cplx left = 0.0, right = 0.0;
    for (int k = 0; k < p1; ++k) {
      left += w1[k] * f(k, j);
      right += w1[k] * f(g.G1() - 1 - k, j);
    }
    const cplx phase = std::polar(1.0, -2.0 * std::numbers::pi * M * g.x2(j) / g.L2());
    r.x1 = std::max(r.x1, std::abs(left - phase * right));
  }
  const int p2 = std::min(10, g.G2());
  const std::vector<double> w2 = boundary_weights(p2);
  for (int i = 0; i < g.G1(); ++i) {
    cplx bottom = 0.0, top = 0.0;
    for (int k = 0; k < p2; ++k) {
      bottom += w2[k] * f(i, k);
      top += w2[k] * f(i, g.G2() - 1 - k);
    }
    r.x2 = std::max(r.x2, std::abs(bottom - top));
  }
  return r;
}

}  // namespace lhf
