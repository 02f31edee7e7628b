// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "lhf/core/constants.hpp"
#include "lhf/core/grid.hpp"
#include "lhf/core/potential.hpp"

namespace lhf {

enum class Scheme { Rk4, Rk4Reorth };

std::string_view to_string(Scheme s) noexcept;

struct SimulationConfig {
  PhysicalConstants constants;
  DomainConfig domain;
  int n_max = 0;
  int N = 1;
  PotentialSpec potential;
  int G1 = 64;
  int G2 = 64;
  int lattice_cut = 0;  // 0 picks the cut from the Hermite tail
  double gram_tolerance = 1e-8;
  double dt = 1e-3;
  double t_final = 1.0;
  Scheme integrator = Scheme::Rk4;
  int sample_every = 10;

  int K() const { return (n_max + 1) * domain.M; }
  Grid grid() const { return Grid(G1, G2, domain); }
};

/// Parses the sectioned key = value format:
///
///   [constants]  hbar mass charge light_speed          (default 1)
///   [domain]     L1 L2 M                               (required)
///   [basis]      n_max N (required) G1 G2 lattice_cut gram_tolerance
///   [dynamics]   dt t_final integrator sample_every
///   [potential]  kind strength p1 p2 sigma table
///
/// `#` starts a comment. A relative `table` path resolves against `base_dir`.
SimulationConfig parse_config(std::string_view text, const std::string& base_dir = ".");

SimulationConfig load_config(const std::string& path);

}  // namespace lhf
