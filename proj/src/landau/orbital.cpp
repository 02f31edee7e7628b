// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/landau/orbital.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lhf/core/error.hpp"

namespace lhf {

cplx infinite_volume_orbital(int n, double k2, double x1, double x2, const PhysicalConstants& constants) {
  if (n < 0) raise(ErrorCode::DegreeOutOfRange, "n=" + std::to_string(n));
  const double b = constants.b();
  const double profile = std::pow(b, 0.25) * hermite_function(n, std::sqrt(b) * (x1 - k2 / b));
  return std::polar(profile, k2 * x2);
}

int required_lattice_cut(int n, const PhysicalConstants& constants, const DomainConfig& domain) {
  const double reach = hermite_tail(n) / std::sqrt(constants.b());
  return int(std::ceil(reach / domain.L1 + 1.5));
}

LandauOrbital::LandauOrbital(int n, int m, const PhysicalConstants& constants, const DomainConfig& domain,
                             int lattice_cut)
    : n_(n), m_(m), cut_(lattice_cut), b_(constants.b()), domain_(domain), hermite_(n < 0 ? 0 : n) {
  if (n < 0) raise(ErrorCode::DegreeOutOfRange, "n=" + std::to_string(n));
  if (m < 0 || m >= domain.M) raise(ErrorCode::InvalidValue, "m=" + std::to_string(m));
  const int needed = required_lattice_cut(n, constants, domain);
  if (cut_ == 0) cut_ = needed;
  if (cut_ < needed)
    raise(ErrorCode::TruncationTooSmall,
          "lattice_cut=" + std::to_string(cut_) + " below " + std::to_string(needed));
}

cplx LandauOrbital::operator()(double x1, double x2) const {
  const double L1 = domain_.L1, L2 = domain_.L2;
  const double k = 2.0 * std::numbers::pi / L2;
  const double shift = double(m_) / domain_.M;
  const double sb = std::sqrt(b_);
  cplx sum = 0.0;
  for (int l = -cut_; l <= cut_; ++l)
    sum += std::polar(hermite_(n_, sb * (x1 + (l - shift) * L1)), -k * domain_.M * l * x2);
  return std::pow(b_, 0.25) / std::sqrt(L2) * std::polar(1.0, k * m_ * x2) * sum;
}

OrbitalField LandauOrbital::sample(const Grid& grid) const {
  if (grid.L1() != domain_.L1 || grid.L2() != domain_.L2) raise(ErrorCode::GridMismatch, "grid box differs from domain");
  const double L1 = domain_.L1, L2 = domain_.L2;
  const double k = 2.0 * std::numbers::pi / L2;
  const double shift = double(m_) / domain_.M;
  const double sb = std::sqrt(b_);
  const int terms = 2 * cut_ + 1;
  // values = H P^T with H(i, l) the Hermite profile and P(j, l) the x2 phase.
  MatrixXcd H(grid.G1(), terms);
  MatrixXcd P(grid.G2(), terms);
  for (int t = 0; t < terms; ++t) {
    const int l = t - cut_;
    for (int i = 0; i < grid.G1(); ++i) H(i, t) = hermite_(n_, sb * (grid.x1(i) + (l - shift) * L1));
    for (int j = 0; j < grid.G2(); ++j) P(j, t) = std::polar(1.0, k * (m_ - domain_.M * l) * grid.x2(j));
  }
  MatrixXcd values = (std::pow(b_, 0.25) / std::sqrt(L2)) * (H * P.transpose());
  return OrbitalField(grid, std::move(values), OrbitalLabel{n_, m_});
}

OrbitalField finite_volume_orbital(int n, int m, const Grid& grid, const PhysicalConstants& constants,
                                   const DomainConfig& domain, int lattice_cut) {
  return LandauOrbital(n, m, constants, domain, lattice_cut).sample(grid);
}

}  // namespace lhf
