// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace lhf {

/// Rectangular box [-L1/2, L1/2] x [-L2/2, L2/2] threaded by M flux quanta.
struct DomainConfig {
  double L1 = 0.0;
  double L2 = 0.0;
  int M = 0;

  double area() const { return L1 * L2; }
};

/// Physical constants of the charged particle and the field.
///
/// The field strength is never free: it is derived from the flux quantum
/// count of a DomainConfig so that b L1 L2 = 2 pi M holds by construction.
/// Build instances through `quantized`.
class PhysicalConstants {
 public:
  PhysicalConstants() = default;

  static PhysicalConstants quantized(double hbar, double mass, double charge,
                                     double light_speed,
                                     const DomainConfig& domain);

  double hbar() const { return hbar_; }
  double mass() const { return mass_; }
  double charge() const { return charge_; }
  double light_speed() const { return light_speed_; }
  /// Field strength B.
  double field() const { return field_; }
  /// Inverse squared magnetic length b = qB / (hbar c).
  double b() const { return b_; }
  /// Cyclotron frequency hbar b / m.
  double omega_c() const { return hbar_ * b_ / mass_; }
  /// Total flux B L1 L2.
  double flux(const DomainConfig& domain) const { return field_ * domain.area(); }
  /// Flux quantum 2 pi hbar c / q.
  double flux_quantum() const;

  /// Same constants with hbar replaced; the field is re-derived so b is kept.
  PhysicalConstants with_hbar(double hbar) const;

 private:
  double hbar_ = 1.0;
  double mass_ = 1.0;
  double charge_ = 1.0;
  double light_speed_ = 1.0;
  double field_ = 0.0;
  double b_ = 0.0;
};

/// Landau level E_n = hbar^2 b (2n+1) / (2m).
double landau_level(int n, const PhysicalConstants& constants);

}  // namespace lhf
