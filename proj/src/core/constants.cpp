// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/core/constants.hpp"

#include <numbers>
#include <string>

#include "lhf/core/error.hpp"

namespace lhf {

PhysicalConstants PhysicalConstants::quantized(double hbar, double mass,
                                               double charge,
                                               double light_speed,
                                               const DomainConfig& domain) {
  auto positive = [](double v, const char* key) {
    if (!(v > 0.0)) raise(ErrorCode::InvalidValue, key);
  };
  positive(hbar, "hbar");
  positive(mass, "mass");
  positive(charge, "charge");
  positive(light_speed, "light_speed");
  positive(domain.L1, "L1");
  positive(domain.L2, "L2");
  if (domain.M < 1) raise(ErrorCode::InvalidValue, "M");

  PhysicalConstants c;
  c.hbar_ = hbar;
  c.mass_ = mass;
  c.charge_ = charge;
  c.light_speed_ = light_speed;
  c.b_ = 2.0 * std::numbers::pi * domain.M / (domain.L1 * domain.L2);
  c.field_ = c.b_ * hbar * light_speed / charge;
  return c;
}

double PhysicalConstants::flux_quantum() const {
  return 2.0 * std::numbers::pi * hbar_ * light_speed_ / charge_;
}

PhysicalConstants PhysicalConstants::with_hbar(double hbar) const {
  if (!(hbar > 0.0)) raise(ErrorCode::InvalidValue, "hbar");
  PhysicalConstants c = *this;
  c.hbar_ = hbar;
  c.field_ = c.b_ * hbar * light_speed_ / charge_;
  return c;
}

double landau_level(int n, const PhysicalConstants& constants) {
  if (n < 0) raise(ErrorCode::InvalidValue, "n=" + std::to_string(n));
  const double hbar = constants.hbar();
  return hbar * hbar / (2.0 * constants.mass()) * constants.b() * (2.0 * n + 1.0);
}

}  // namespace lhf
