// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"

#include "lhf/hartree_fock/hartree_fock.hpp"
#include "lhf/landau/orbital_set.hpp"
#include "lhf/many_body/ground_state.hpp"
#include "lhf/many_body/hamiltonian.hpp"
#include "lhf/many_body/slater.hpp"
#include "support/oracles.hpp"
#include "support/raises.hpp"

using namespace lhf;
using lhf::test::Rng;

namespace {

struct Fixture {
  OrbitalSet set;
  PotentialSpec potential;
  HFModel model;
};

Fixture make_fixture(const PotentialSpec::Kind& kind, int M = 2, int n_max = 1, int G = 48, double hbar = 1.0) {
  const auto d = test::unit_b_domain(M);
  const auto c = PhysicalConstants::quantized(hbar, 1.0, 1.0, 1.0, d);
  OrbitalSet set = build_orbital_set(d, c, n_max, Grid(G, G, d));
  PotentialSpec v(kind, d.L1, d.L2);
  HFModel model{set.energies(), two_body_tensor(v, set), c};
  return {std::move(set), std::move(v), std::move(model)};
}

// Orbitals sampled on the grid, one field per column of `coeffs`.
std::vector<MatrixXcd> grid_orbitals(const OrbitalSet& set, const MatrixXcd& coeffs) {
  std::vector<MatrixXcd> out;
  for (Eigen::Index l = 0; l < coeffs.cols(); ++l) {
    MatrixXcd f = MatrixXcd::Zero(set.grid().G1(), set.grid().G2());
    for (int k = 0; k < set.size(); ++k) f += coeffs(k, l) * set[k].values;
    out.push_back(f);
  }
  return out;
}

// Coefficients <phi_k | f> of a grid field.
VectorXcd project(const OrbitalSet& set, const MatrixXcd& f) {
  VectorXcd out(set.size());
  for (int k = 0; k < set.size(); ++k) out(k) = inner_product(set[k].values, f, set.grid());
  return out;
}

// int V(x;y) rho(y) dy for V = s g(x) g(y), as a field in x.
MatrixXcd separable_convolve(double s, const MatrixXcd& g, const MatrixXcd& rho, const Grid& grid) {
  return s * g * (g.cwiseProduct(rho).sum() * grid.weight());
}

double gram_derivative_defect(const MatrixXcd& c, const MatrixXcd& cdot) {
  const MatrixXcd m = c.adjoint() * cdot;
  return (m + m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("potentials vanish without interaction or partners") {
  Rng rng(1);
  const Fixture f = make_fixture(ZeroKernel{});
  const MatrixXcd c = test::random_orthonormal(rng, 4, 2);
  CHECK(direct_potential_action(c, f.model.tensor, 0).norm() == 0.0);
  CHECK(exchange_potential_action(c, f.model.tensor, 1).norm() == 0.0);

  const Fixture g = make_fixture(PeriodicGaussian{0.8, 0.7});
  const MatrixXcd one = test::random_orthonormal(rng, 4, 1);
  CHECK(direct_potential_action(one, g.model.tensor, 0).norm() < 1e-15);
  CHECK(exchange_potential_action(one, g.model.tensor, 0).norm() < 1e-15);
  LHF_CHECK_RAISES(direct_potential_action(c, g.model.tensor, 2), IndexOutOfRange);
  LHF_CHECK_RAISES(exchange_potential_action(c, g.model.tensor, -1), IndexOutOfRange);
}

TEST_CASE("exchange vanishes for disjoint orbitals under a constant kernel") {
  Rng rng(2);
  const Fixture f = make_fixture(SeparableCosine{0.6, 0, 0});
  MatrixXcd c = MatrixXcd::Zero(4, 2);
  c.block(0, 0, 2, 1) = test::random_unit_vector(rng, 2);
  c.block(2, 1, 2, 1) = test::random_unit_vector(rng, 2);
  CHECK(exchange_potential_action(c, f.model.tensor, 0).norm() < 1e-8);
  CHECK(exchange_potential_action(c, f.model.tensor, 1).norm() < 1e-8);
  // The direct term of a constant kernel is that constant times phi_l.
  CHECK((direct_potential_action(c, f.model.tensor, 0) - 0.6 * c.col(0)).norm() < 1e-8);
}

TEST_CASE("direct and exchange actions match grid-space evaluation") {
  Rng rng(3);
  const double s = 0.7;
  const Fixture f = make_fixture(SeparableCosine{s, 1, 1});
  const Grid& grid = f.set.grid();
  const MatrixXcd gfield = OrbitalField::sample(grid, [&](double x1, double x2) {
                             return std::cos(2.0 * std::numbers::pi * (x1 / grid.L1() + x2 / grid.L2()));
                           }).values;
  for (int trial = 0; trial < 3; ++trial) {
    const MatrixXcd c = test::random_orthonormal(rng, 4, 2);
    const auto psi = grid_orbitals(f.set, c);
    for (int l = 0; l < 2; ++l) {
      const int o = 1 - l;
      const MatrixXcd kl = separable_convolve(s, gfield, psi[std::size_t(o)].cwiseAbs2().cast<cplx>(), grid);
      const VectorXcd direct = project(f.set, kl.cwiseProduct(psi[std::size_t(l)]));
      CHECK((direct_potential_action(c, f.model.tensor, l) - direct).norm() < 1e-8);
      const MatrixXcd xl = separable_convolve(
          s, gfield, psi[std::size_t(o)].conjugate().cwiseProduct(psi[std::size_t(l)]), grid);
      const VectorXcd exchange = project(f.set, xl.cwiseProduct(psi[std::size_t(o)]));
      CHECK((exchange_potential_action(c, f.model.tensor, l) - exchange).norm() < 1e-8);
    }
  }
}

TEST_CASE("free motion of eigenorbitals") {
  const Fixture f = make_fixture(ZeroKernel{}, 2, 1, 48, 0.6);
  MatrixXcd c = MatrixXcd::Zero(4, 2);
  c(0, 0) = 1.0;
  c(3, 1) = 1.0;
  const HFState s = make_hf_state(1.0, c, f.model);
  const HFDerivative d = hf_rhs(s, f.model);
  for (int l = 0; l < 2; ++l) {
    const int k = l == 0 ? 0 : 3;
    const VectorXcd expect = cplx(0.0, -1.0 / 0.6) * f.model.energies(k) * c.col(l);
    CHECK((d.orbitals_dot.col(l) - expect).norm() < 1e-14);
  }
  CHECK(std::abs(d.a_dot) < 1e-14);

  const HFTrajectory tr = integrate_hf(s, 1e-3, 1.0, Scheme::Rk4, f.model, 100);
  const HFState& end = tr.samples.back().state;
  CHECK(end.t == doctest::Approx(1.0));
  for (int l = 0; l < 2; ++l) {
    const int k = l == 0 ? 0 : 3;
    const VectorXcd expect = std::exp(cplx(0.0, -f.model.energies(k) / 0.6)) * c.col(l);
    CHECK((end.orbitals.col(l) - expect).norm() < 1e-8);
  }
  for (const auto& smp : tr.samples) CHECK(std::abs(std::abs(smp.state.a) - 1.0) < 1e-8);
}

TEST_CASE("orbital derivative keeps the Gram matrix fixed") {
  Rng rng(4);
  const Fixture f = make_fixture(PeriodicGaussian{0.9, 0.6}, 3, 1, 64);
  for (int N : {1, 2, 3, 4}) {
    const HFState s = make_hf_state(std::polar(1.0, 0.4), test::random_orthonormal(rng, 6, N), f.model);
    CHECK(gram_derivative_defect(s.orbitals, hf_rhs(s, f.model).orbitals_dot) < 1e-10);
  }
}

TEST_CASE("HF energy agrees with the many-body expectation") {
  Rng rng(5);
  const Fixture f = make_fixture(PeriodicGaussian{0.9, 0.6}, 3, 1, 64);
  for (int N : {2, 3}) {
    const DeterminantBasis basis(6, N);
    const SparseMatrixXcd H = assemble_hamiltonian(basis, f.model.energies, f.model.tensor);
    for (int trial = 0; trial < 4; ++trial) {
      const HFState s = make_hf_state(std::polar(1.0, 1.1 * trial), test::random_orthonormal(rng, 6, N), f.model);
      const VectorXcd u = embed_slater(s.a, s.orbitals, basis);
      const double exact = u.dot(H * u).real();
      CHECK(std::abs(s.E0 - exact) < 1e-9);
      CHECK(std::abs(hf_energy(s, f.model) - exact) < 1e-9);
      // The Fock matrix is Hermitian.
      const MatrixXcd F = fock_matrix(s.orbitals, f.model);
      CHECK((F - F.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("non-interacting filled state has the filling energy") {
  const Fixture f = make_fixture(ZeroKernel{}, 3, 1, 64);
  MatrixXcd c = MatrixXcd::Identity(6, 4);
  const HFState s = make_hf_state(1.0, c, f.model);
  const GroundState gs = noninteracting_ground_state(FillingSpec(4, 3), f.model.energies);
  CHECK(hf_energy(s, f.model) == doctest::Approx(gs.energy).epsilon(1e-12));
}

TEST_CASE("conservation along an interacting trajectory") {
  Rng rng(6);
  const Fixture f = make_fixture(PeriodicGaussian{0.95, 0.6}, 3, 1, 64);
  REQUIRE(f.potential.sup_norm(f.set.grid()) <= 1.0);
  const HFState s = make_hf_state(1.0, test::random_orthonormal(rng, 6, 3), f.model);
  double worst_gram = 0.0, worst_energy = 0.0, worst_norm = 0.0;
  integrate_hf(s, 1e-3, 1.0, Scheme::Rk4, f.model, 50, [&](const HFState& st) {
    worst_gram = std::max(worst_gram, orthonormality_defect(st.orbitals));
    worst_energy = std::max(worst_energy, std::abs(hf_energy(st, f.model) - s.E0));
    worst_norm = std::max(worst_norm, std::abs(std::abs(st.a) - 1.0));
  });
  CHECK(worst_gram <= 1e-6);
  CHECK(worst_energy <= 1e-6);
  CHECK(worst_norm <= 1e-8);
}

TEST_CASE("RK4 self-convergence") {
  Rng rng(7);
  const Fixture f = make_fixture(PeriodicGaussian{1.0, 0.6}, 3, 1, 64);
  const HFState s = make_hf_state(1.0, test::random_orthonormal(rng, 6, 2), f.model);
  const double T = 0.5;
  auto endpoint = [&](double dt) {
    const HFState e = integrate_hf(s, dt, T, Scheme::Rk4, f.model, 1000000).samples.back().state;
    const DeterminantBasis basis(6, 2);
    return embed_slater(e.a, e.orbitals, basis);
  };
  const VectorXcd ref = endpoint(1e-5);
  const double coarse = (endpoint(0.05) - ref).norm();
  const double fine = (endpoint(0.025) - ref).norm();
  MESSAGE("RK4 error ratio " << coarse / fine);
  CHECK(coarse / fine > 14.0);
  CHECK(coarse / fine < 18.0);
}

TEST_CASE("gauge transformations") {
  Rng rng(8);
  const Fixture f = make_fixture(PeriodicGaussian{0.9, 0.6}, 3, 1, 64);
  const DeterminantBasis basis(6, 3);
  const HFState s = make_hf_state(std::polar(1.0, 0.3), test::random_orthonormal(rng, 6, 3), f.model);

  const HFState same = gauge_transform(s, MatrixXcd::Identity(3, 3));
  CHECK((same.orbitals - s.orbitals).norm() == 0.0);
  CHECK(same.a == s.a);

  for (int trial = 0; trial < 5; ++trial) {
    const MatrixXcd U = test::random_unitary(rng, 3);
    const HFState g = gauge_transform(s, U);
    CHECK((embed_slater(g.a, g.orbitals, basis) - embed_slater(s.a, s.orbitals, basis)).norm() < 1e-9);
    CHECK(std::abs(hf_energy(g, f.model) - hf_energy(s, f.model)) < 1e-10);
  }
  LHF_CHECK_RAISES(gauge_transform(s, 1.01 * MatrixXcd::Identity(3, 3)), NotUnitary);
  LHF_CHECK_RAISES(gauge_transform(s, MatrixXcd::Identity(2, 2)), DimensionMismatch);

  // Integrate-then-transform equals transform-then-integrate.
  const MatrixXcd U = test::random_unitary(rng, 3);
  const HFState a = gauge_transform(integrate_hf(s, 1e-3, 0.5, Scheme::Rk4, f.model, 1000).samples.back().state, U);
  const HFState b = integrate_hf(gauge_transform(s, U), 1e-3, 0.5, Scheme::Rk4, f.model, 1000).samples.back().state;
  CHECK((embed_slater(a.a, a.orbitals, basis) - embed_slater(b.a, b.orbitals, basis)).norm() < 1e-6);
}

TEST_CASE("reorthonormalization keeps the Slater state") {
  Rng rng(9);
  const Fixture f = make_fixture(PeriodicGaussian{0.9, 0.6}, 3, 1, 64);
  const DeterminantBasis basis(6, 2);
  HFState s = make_hf_state(1.0, test::random_orthonormal(rng, 6, 2), f.model);
  HFState skewed = s;
  MatrixXcd S = MatrixXcd::Identity(2, 2);
  S(0, 1) = 0.01;
  skewed.orbitals = s.orbitals * S;
  skewed.a = s.a / S.determinant();
  const HFState fixed = reorthonormalize(skewed);
  CHECK(orthonormality_defect(fixed.orbitals) < 1e-14);
  // The wedge is multilinear, so the embedded vector is defined for any columns.
  auto wedge = [&](const HFState& st) {
    VectorXcd out(basis.size());
    for (Eigen::Index d = 0; d < basis.size(); ++d) {
      const auto idx = occupied_indices(basis[d]);
      MatrixXcd sub(2, 2);
      for (int r = 0; r < 2; ++r) sub.row(r) = st.orbitals.row(idx[std::size_t(r)]);
      out(d) = st.a * sub.determinant();
    }
    return out;
  };
  CHECK((wedge(fixed) - wedge(s)).norm() < 1e-12);

  const HFState plain = integrate_hf(s, 1e-3, 0.5, Scheme::Rk4, f.model, 1000).samples.back().state;
  const HFState re = integrate_hf(s, 1e-3, 0.5, Scheme::Rk4Reorth, f.model, 1000).samples.back().state;
  CHECK(orthonormality_defect(re.orbitals) < 1e-13);
  CHECK((embed_slater(plain.a, plain.orbitals, basis) - embed_slater(re.a, re.orbitals, basis)).norm() < 1e-8);
}

TEST_CASE("integrator failures") {
  const Fixture f = make_fixture(ZeroKernel{}, 2, 2, 48);
  MatrixXcd c = MatrixXcd::Zero(6, 2);
  c(4, 0) = 1.0;
  c(5, 1) = 1.0;
  const HFState s = make_hf_state(1.0, c, f.model);
  LHF_CHECK_RAISES(integrate_hf(s, 2.0, 10.0, Scheme::Rk4, f.model), StepUnstable);
  HFState bad = s;
  bad.orbitals(0, 0) = std::numeric_limits<double>::quiet_NaN();
  LHF_CHECK_RAISES(integrate_hf(bad, 1e-3, 1.0, Scheme::Rk4, f.model), NonFiniteValue);
  LHF_CHECK_RAISES(integrate_hf(s, 0.0, 1.0, Scheme::Rk4, f.model), InvalidValue);
}

TEST_CASE("trajectory sampling") {
  const Fixture f = make_fixture(ZeroKernel{});
  const HFState s = make_hf_state(1.0, MatrixXcd::Identity(4, 2), f.model);
  int calls = 0;
  const HFTrajectory tr = integrate_hf(s, 0.1, 1.05, Scheme::Rk4, f.model, 4, [&](const HFState&) { ++calls; });
  CHECK(calls == 12);
  REQUIRE(tr.samples.size() == 4);
  CHECK(tr.samples[0].state.t == 0.0);
  CHECK(tr.samples[1].state.t == doctest::Approx(0.4));
  CHECK(tr.samples.back().state.t == doctest::Approx(1.05));
  for (std::size_t i = 1; i < tr.samples.size(); ++i) CHECK(tr.samples[i].state.t > tr.samples[i - 1].state.t);
}
