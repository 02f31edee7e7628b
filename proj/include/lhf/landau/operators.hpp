// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <complex>

#include "lhf/core/constants.hpp"
#include "lhf/core/grid.hpp"
#include "lhf/core/types.hpp"

namespace lhf {

/// Magnetic translation in the Landau gauge, (T_a f)(x) = exp(-i b a1 x2) f(x + a),
/// applied to any callable f(x1, x2).
template <typename Fn>
auto magnetic_translate(Fn f, double a1, double a2, double b) {
  return [f = std::move(f), a1, a2, b](double x1, double x2) -> cplx {
    return std::polar(1.0, -b * a1 * x2) * cplx(f(x1 + a1, x2 + a2));
  };
}

/// Grid version. Both components of `a` must be integer multiples of the
/// grid spacing; points pushed across the box are folded back with the
/// magnetic-periodic rule f(x1 + L1, x2) = exp(i b L1 x2) f(x1, x2).
OrbitalField magnetic_translate(const OrbitalField& field, double a1, double a2, const PhysicalConstants& constants);

/// (1/2m)(p - (q/c)A)^2 f with A = B(0, x1), i.e.
/// (hbar^2/2m) [-d1^2 - d2^2 + 2 i b x1 d2 + b^2 x1^2] f,
/// by fourth-order centered differences with magnetic-periodic wrap.
OrbitalField apply_landau_hamiltonian(const OrbitalField& field, const PhysicalConstants& constants);

struct BcResidual {
  double x1 = 0.0;  // |f(-L1/2, x2) - exp(-i 2 pi M x2/L2) f(L1/2, x2)|
  double x2 = 0.0;  // |f(x1, -L2/2) - f(x1, L2/2)|
  double max() const { return std::max(x1, x2); }
};

/// Boundary values are extrapolated from the ten nearest midpoints on
/// each side.
BcResidual check_magnetic_bc(const OrbitalField& field, int M);

}  // namespace lhf
