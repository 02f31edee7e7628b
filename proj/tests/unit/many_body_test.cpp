// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "doctest.h"

#include "lhf/landau/orbital_set.hpp"
#include "lhf/many_body/determinant_basis.hpp"
#include "lhf/many_body/ground_state.hpp"
#include "lhf/many_body/hamiltonian.hpp"
#include "lhf/many_body/interaction.hpp"
#include "lhf/many_body/propagate.hpp"
#include "lhf/many_body/slater.hpp"
#include "support/oracles.hpp"
#include "support/raises.hpp"

using namespace lhf;
using lhf::test::Rng;

namespace {

Occupation mask(const std::vector<int>& idx) {
  Occupation m = 0;
  for (int i : idx) m |= Occupation(1) << i;
  return m;
}

InteractionTensor to_tensor(const test::Tensor4& v) {
  const int K = v.K;
  MatrixXcd data(K * K, K * K);
  for (int a = 0; a < K; ++a)
    for (int b = 0; b < K; ++b)
      for (int c = 0; c < K; ++c)
        for (int d = 0; d < K; ++d) data(a * K + c, b * K + d) = v(a, b, c, d);
  return InteractionTensor(K, data);
}

// First-quantized H on the antisymmetrized N-fold product space, for any
// small N: one-body energies on every particle plus V on every pair.
MatrixXcd first_quantized_hamiltonian(const test::Tensor4& v, const VectorXd& energies, int N) {
  const int K = v.K;
  int dim = 1;
  for (int i = 0; i < N; ++i) dim *= K;
  auto digits = [&](int s) {
    std::vector<int> x(static_cast<std::size_t>(N));
    for (int p = N - 1; p >= 0; --p, s /= K) x[std::size_t(p)] = s % K;
    return x;
  };
  auto encode = [&](const std::vector<int>& x) {
    int s = 0;
    for (int p = 0; p < N; ++p) s = s * K + x[std::size_t(p)];
    return s;
  };
  MatrixXcd h = MatrixXcd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    const auto x = digits(s);
    for (int p = 0; p < N; ++p) h(s, s) += energies(x[std::size_t(p)]);
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q)
        for (int a = 0; a < K; ++a)
          for (int b = 0; b < K; ++b) {
            auto y = x;
            y[std::size_t(p)] = a;
            y[std::size_t(q)] = b;
            h(encode(y), s) += v(a, b, x[std::size_t(p)], x[std::size_t(q)]);
          }
  }
  const auto dets = test::combinations(K, N);
  MatrixXcd states = MatrixXcd::Zero(dim, Eigen::Index(dets.size()));
  const double norm = 1.0 / std::sqrt(std::tgamma(N + 1.0));
  for (std::size_t d = 0; d < dets.size(); ++d) {
    std::vector<int> perm(static_cast<std::size_t>(N));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> x(static_cast<std::size_t>(N));
      for (int p = 0; p < N; ++p) x[std::size_t(p)] = dets[d][std::size_t(perm[std::size_t(p)])];
      states(encode(x), Eigen::Index(d)) += norm * test::permutation_sign(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return states.adjoint() * h * states;
}

// Tensor by brute-force double sum over grid x grid.
test::Tensor4 direct_tensor(const PotentialSpec& v, const OrbitalSet& set) {
  const Grid& g = set.grid();
  const int K = set.size();
  const int P = int(g.size());
  std::vector<double> x1(static_cast<std::size_t>(P)), x2(static_cast<std::size_t>(P));
  for (int j = 0; j < g.G2(); ++j)
    for (int i = 0; i < g.G1(); ++i) {
      x1[std::size_t(i + j * g.G1())] = g.x1(i);
      x2[std::size_t(i + j * g.G1())] = g.x2(j);
    }
  MatrixXd kern(P, P);
  for (int p = 0; p < P; ++p)
    for (int q = 0; q < P; ++q) kern(p, q) = v(x1[std::size_t(p)], x2[std::size_t(p)], x1[std::size_t(q)], x2[std::size_t(q)]);
  const double w = g.weight();
  test::Tensor4 t{K, std::vector<cplx>(std::size_t(K * K * K * K))};
  for (int a = 0; a < K; ++a)
    for (int c = 0; c < K; ++c) {
      const VectorXcd left = (set[a].values.conjugate().cwiseProduct(set[c].values)).reshaped();
      const VectorXcd kl = kern.transpose().cast<cplx>() * left;
      for (int b = 0; b < K; ++b)
        for (int d = 0; d < K; ++d) {
          const VectorXcd right = (set[b].values.conjugate().cwiseProduct(set[d].values)).reshaped();
          t(a, b, c, d) = (kl.array() * right.array()).sum() * w * w;
        }
    }
  return t;
}

double max_tensor_diff(const InteractionTensor& t, const test::Tensor4& ref) {
  double worst = 0.0;
  const int K = t.K();
  for (int a = 0; a < K; ++a)
    for (int b = 0; b < K; ++b)
      for (int c = 0; c < K; ++c)
        for (int d = 0; d < K; ++d) worst = std::max(worst, std::abs(t(a, b, c, d) - ref(a, b, c, d)));
  return worst;
}

OrbitalSet small_set(int M, int n_max, int G) {
  const auto d = test::unit_b_domain(M);
  return build_orbital_set(d, test::unit_constants(d), n_max, Grid(G, G, d));
}

}  // namespace

TEST_CASE("determinant enumeration") {
  const DeterminantBasis b3(3, 2);
  REQUIRE(b3.size() == 3);
  CHECK(b3[0] == mask({0, 1}));
  CHECK(b3[1] == mask({0, 2}));
  CHECK(b3[2] == mask({1, 2}));
  CHECK(DeterminantBasis(6, 3).size() == 20);

  const DeterminantBasis b9 = enumerate_determinants(9, 4);
  const auto ref = test::combinations(9, 4);
  REQUIRE(b9.size() == Eigen::Index(ref.size()));
  REQUIRE(ref.size() == 126);
  for (Eigen::Index i = 0; i < b9.size(); ++i) {
    CHECK(b9[i] == mask(ref[std::size_t(i)]));
    CHECK(b9.index(b9[i]) == i);
    CHECK(occupied_indices(b9[i]) == ref[std::size_t(i)]);
  }
  CHECK(b9.index(mask({0, 1, 2})) == -1);
  CHECK(b9.index(mask({0, 1, 2, 9})) == -1);
  CHECK(binomial(20, 10) == 184756.0);
  LHF_CHECK_RAISES(DeterminantBasis(30, 15), TooLarge);
  LHF_CHECK_RAISES(DeterminantBasis(10, 5, 100), TooLarge);
  LHF_CHECK_RAISES(DeterminantBasis(4, 5), InvalidValue);
}

TEST_CASE("mode sign counts occupied modes below") {
  CHECK(mode_sign(mask({0, 2, 5}), 0) == 1.0);
  CHECK(mode_sign(mask({0, 2, 5}), 3) == 1.0);
  CHECK(mode_sign(mask({0, 2, 5}), 4) == 1.0);
  CHECK(mode_sign(mask({0, 2, 5}), 1) == -1.0);
  CHECK(mode_sign(mask({0, 2, 5}), 6) == -1.0);
}

TEST_CASE("Slater overlap") {
  Rng rng(31);
  const MatrixXcd c = test::random_orthonormal(rng, 7, 3);
  CHECK(std::abs(slater_overlap(c, c) - 1.0) < 1e-13);
  MatrixXcd swapped = c;
  swapped.col(0).swap(swapped.col(2));
  CHECK(std::abs(slater_overlap(c, swapped) + 1.0) < 1e-13);
  for (int N : {2, 3, 4})
    for (int trial = 0; trial < 10; ++trial) {
      const MatrixXcd a = test::random_matrix(rng, 6, N), b = test::random_matrix(rng, 6, N);
      CHECK(std::abs(slater_overlap(a, b) - test::leibniz_det(a.adjoint() * b)) < 1e-10);
    }
  LHF_CHECK_RAISES(slater_overlap(test::random_matrix(rng, 5, 2), test::random_matrix(rng, 5, 3)), LengthMismatch);
  CHECK(orthonormality_defect(c) < 1e-14);
}

TEST_CASE("embedding a Slater determinant") {
  const DeterminantBasis basis(6, 3);
  const MatrixXcd first = MatrixXcd::Identity(6, 3);
  const VectorXcd e = embed_slater(1.0, first, basis);
  CHECK(std::abs(e(0) - 1.0) < 1e-15);
  CHECK(e.tail(e.size() - 1).norm() == 0.0);

  Rng rng(32);
  const MatrixXcd c = test::random_orthonormal(rng, 6, 3);
  const cplx phase = std::polar(0.8, 0.3);
  const VectorXcd u = embed_slater(phase, c, basis);
  CHECK(std::abs(u.norm() - 0.8) < 1e-9);
  const auto dets = test::combinations(6, 3);
  for (std::size_t d = 0; d < dets.size(); ++d) {
    MatrixXcd sub(3, 3);
    for (int r = 0; r < 3; ++r) sub.row(r) = c.row(dets[d][std::size_t(r)]);
    CHECK(std::abs(u(Eigen::Index(d)) - phase * test::leibniz_det(sub)) < 1e-12);
  }
  const MatrixXcd U = test::random_unitary(rng, 3);
  const VectorXcd mixed = embed_slater(phase, c * U, basis);
  CHECK((mixed - U.determinant() * u).norm() < 1e-12);
  LHF_CHECK_RAISES(embed_slater(1.0, 2.0 * c, basis), NotOrthonormal);
}

TEST_CASE("tensor of simple potentials") {
  const OrbitalSet set = small_set(2, 1, 48);
  const Grid& g = set.grid();
  const double L1 = g.L1(), L2 = g.L2();
  const int K = set.size();

  CHECK(two_body_tensor(PotentialSpec(ZeroKernel{}, L1, L2), set).is_zero());

  // Constant kernel: p1 = p2 = 0 turns the separable cosine into c.
  const InteractionTensor constant = two_body_tensor(PotentialSpec(SeparableCosine{0.7, 0, 0}, L1, L2), set);
  for (int a = 0; a < K; ++a)
    for (int b = 0; b < K; ++b)
      for (int c = 0; c < K; ++c)
        for (int d = 0; d < K; ++d)
          CHECK(std::abs(constant(a, b, c, d) - (a == c && b == d ? 0.7 : 0.0)) < 1e-8);

  // Factorized oracle for g(x) g(y).
  const double s = 0.4;
  const PotentialSpec sep(SeparableCosine{s, 1, 1}, L1, L2);
  const auto gfield = OrbitalField::sample(g, [&](double x1, double x2) {
    return std::cos(2.0 * std::numbers::pi * (x1 / L1 + x2 / L2));
  });
  MatrixXcd m(K, K);
  for (int a = 0; a < K; ++a)
    for (int c = 0; c < K; ++c)
      m(a, c) = inner_product(set[a], OrbitalField(g, gfield.values.cwiseProduct(set[c].values)));
  const InteractionTensor t = two_body_tensor(sep, set);
  for (int a = 0; a < K; ++a)
    for (int b = 0; b < K; ++b)
      for (int c = 0; c < K; ++c)
        for (int d = 0; d < K; ++d) CHECK(std::abs(t(a, b, c, d) - s * m(a, c) * m(b, d)) < 1e-8);
  CHECK(t.exchange_defect() < 1e-14);
  CHECK(t.hermiticity_defect() < 1e-14);
}

TEST_CASE("Fourier tensor matches a direct double sum") {
  const OrbitalSet set = small_set(2, 1, 24);
  const Grid& g = set.grid();
  SUBCASE("periodic gaussian") {
    const PotentialSpec v(PeriodicGaussian{0.9, 0.5}, g.L1(), g.L2());
    const InteractionTensor t = two_body_tensor(v, set);
    CHECK(max_tensor_diff(t, direct_tensor(v, set)) < 1e-10);
  }
  SUBCASE("tabulated") {
    Rng rng(40);
    MatrixXd raw(24, 24), table(24, 24);
    for (int i = 0; i < 24; ++i)
      for (int j = 0; j < 24; ++j) raw(i, j) = test::uniform(rng);
    for (int i = 0; i < 24; ++i)
      for (int j = 0; j < 24; ++j) table(i, j) = 0.5 * (raw(i, j) + raw((24 - i) % 24, (24 - j) % 24));
    const PotentialSpec v(TabulatedKernel{table, "mem"}, g.L1(), g.L2());
    const InteractionTensor t = two_body_tensor(v, set);
    CHECK(max_tensor_diff(t, direct_tensor(v, set)) < 1e-10);
    CHECK(t.exchange_defect() < 1e-15);
    LHF_CHECK_RAISES(two_body_tensor(PotentialSpec(TabulatedKernel{raw, "mem"}, g.L1(), g.L2()), set),
                     SymmetryViolation);
  }
}

TEST_CASE("non-interacting Hamiltonian is diagonal") {
  const DeterminantBasis basis(6, 3);
  VectorXd e(6);
  e << 0.5, 0.5, 1.5, 1.5, 2.5, 2.5;
  const SparseMatrixXcd H = assemble_hamiltonian(basis, e, InteractionTensor());
  for (Eigen::Index i = 0; i < basis.size(); ++i) {
    double expect = 0.0;
    for (int k : occupied_indices(basis[i])) expect += e(k);
    CHECK(H.coeff(i, i) == cplx(expect));
  }
  CHECK(H.nonZeros() == basis.size());
  LHF_CHECK_RAISES(assemble_hamiltonian(basis, VectorXd::Zero(5), InteractionTensor()), DimensionMismatch);
  Rng rng(70);
  LHF_CHECK_RAISES(assemble_hamiltonian(basis, e, to_tensor(test::random_symmetric_tensor(rng, 4))), DimensionMismatch);
}

TEST_CASE("Hamiltonian matches the first-quantized oracle") {
  Rng rng(50);
  for (auto [K, N] : {std::pair{4, 2}, {5, 2}, {5, 3}, {6, 4}}) {
    const test::Tensor4 v = test::random_symmetric_tensor(rng, K);
    VectorXd e(K);
    for (int k = 0; k < K; ++k) e(k) = test::uniform(rng, 0.0, 3.0);
    const DeterminantBasis basis(K, N);
    const SparseMatrixXcd H = assemble_hamiltonian(basis, e, to_tensor(v));
    const MatrixXcd ref = first_quantized_hamiltonian(v, e, N);
    CHECK((MatrixXcd(H) - ref).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(hermiticity_defect(H) <= 1e-10);
    if (N == 2) CHECK((test::two_particle_hamiltonian(v, e, test::combinations(K, 2)) - ref).norm() < 1e-10);
  }
}

TEST_CASE("interaction norm bound") {
  const OrbitalSet set = small_set(3, 1, 64);
  const Grid& g = set.grid();
  for (int N : {2, 3}) {
    const PotentialSpec v(PeriodicGaussian{1.3, 0.8}, g.L1(), g.L2());
    const DeterminantBasis basis(set.size(), N);
    REQUIRE(basis.size() <= 500);
    const SparseMatrixXcd H = assemble_hamiltonian(basis, VectorXd::Zero(set.size()), two_body_tensor(v, set));
    const Eigen::SelfAdjointEigenSolver<MatrixXcd> es{MatrixXcd(H)};
    const double norm = es.eigenvalues().cwiseAbs().maxCoeff();
    CHECK(norm <= binomial(N, 2) * v.sup_norm(g) + 1e-9);
    CHECK(norm > 0.0);
  }
}

TEST_CASE("non-interacting ground states") {
  auto levels = [](int M, int n_max) {
    VectorXd e((n_max + 1) * M);
    for (int k = 0; k < e.size(); ++k) e(k) = 0.5 + k / M;
    return e;
  };
  const GroundState a = noninteracting_ground_state(FillingSpec(3, 3), levels(3, 1));
  CHECK(a.nu == 0);
  CHECK(a.r == 0);
  CHECK(a.energy == doctest::Approx(1.5));
  CHECK(a.degeneracy == 1);

  const GroundState b = noninteracting_ground_state(FillingSpec(6, 4), levels(4, 1));
  CHECK(b.r == 2);
  CHECK(b.degeneracy == 6);
  REQUIRE(b.occupations.size() == 6);
  for (Occupation o : b.occupations) CHECK((o & 0xF) == 0xF);

  const GroundState c = noninteracting_ground_state(FillingSpec(5, 2), levels(2, 2));
  CHECK(c.nu == 1);
  CHECK(c.r == 1);
  CHECK(c.energy == doctest::Approx(6.5));

  const FillingSpec few(2, 5);
  CHECK(few.nu() == -1);
  CHECK(few.r() == 2);
  LHF_CHECK_RAISES(noninteracting_ground_state(FillingSpec(5, 2), levels(2, 1)), TruncationTooSmall);
  LHF_CHECK_RAISES(FillingSpec(3, 0), InvalidValue);
}

TEST_CASE("dense diagonalization reproduces the filling energy and degeneracy") {
  for (auto [M, N] : {std::pair{2, 3}, {3, 4}, {3, 3}, {4, 6}}) {
    const int n_max = N / M + 1;
    VectorXd e((n_max + 1) * M);
    for (int k = 0; k < e.size(); ++k) e(k) = 0.5 + k / M;
    const DeterminantBasis basis(int(e.size()), N);
    const SparseMatrixXcd H = assemble_hamiltonian(basis, e, InteractionTensor());
    const Eigen::SelfAdjointEigenSolver<MatrixXcd> es{MatrixXcd(H)};
    const GroundState gs = noninteracting_ground_state(FillingSpec(N, M), e);
    const double e0 = es.eigenvalues()(0);
    CHECK(std::abs(e0 - gs.energy) < 1e-10);
    long mult = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      if (std::abs(es.eigenvalues()(i) - e0) < 1e-10) ++mult;
    CHECK(mult == long(binomial(M, gs.r)));
    CHECK(mult == gs.degeneracy);
  }
}

TEST_CASE("ground-state energy is quadratic in N") {
  for (int M : {1, 2, 3, 5}) {
    VectorXd e(7 * M);
    for (int k = 0; k < e.size(); ++k) e(k) = 0.5 + k / M;
    Eigen::MatrixXd A(6, 3);
    VectorXd y(6);
    for (int j = 1; j <= 6; ++j) {
      const int N = j * M;
      A.row(j - 1) << 1.0, double(N), double(N) * N;
      y(j - 1) = noninteracting_ground_state(FillingSpec(N, M), e).energy;
    }
    const VectorXd coef = A.colPivHouseholderQr().solve(y);
    CHECK((A * coef - y).norm() / y.norm() < 1e-10);
    CHECK(coef(2) == doctest::Approx(0.5 / M));
  }
}

TEST_CASE("exact propagation") {
  Rng rng(60);
  const int K = 6, N = 3;
  const test::Tensor4 v = test::random_symmetric_tensor(rng, K);
  VectorXd e(K);
  for (int k = 0; k < K; ++k) e(k) = 0.5 + k / 3;
  const DeterminantBasis basis(K, N);
  const SparseMatrixXcd H = assemble_hamiltonian(basis, e, to_tensor(v));
  const auto d = test::unit_b_domain(3);
  const auto c = PhysicalConstants::quantized(0.7, 1.0, 1.0, 1.0, d);
  const VectorXcd psi = test::random_unit_vector(rng, basis.size());

  CHECK((evolve_exact(psi, H, 0.0, c) - psi).norm() < 1e-14);

  const Eigen::SelfAdjointEigenSolver<MatrixXcd> es{MatrixXcd(H)};
  const VectorXcd eig = es.eigenvectors().col(3);
  const double E = es.eigenvalues()(3);
  const VectorXcd out = evolve_exact(eig, H, 1.7, c);
  CHECK((out - std::exp(cplx(0.0, -E * 1.7 / 0.7)) * eig).norm() < 1e-9);

  const Propagator dense(H, 0.7);
  const Propagator krylov(H, 0.7, 0);
  REQUIRE(dense.is_dense());
  REQUIRE(!krylov.is_dense());
  const double e0 = expectation(H, psi);
  for (double t : {0.3, 1.0, 4.0}) {
    const VectorXcd a = dense.apply(psi, t), b = krylov.apply(psi, t);
    CHECK((a - b).norm() < 1e-8);
    CHECK(std::abs(a.norm() - 1.0) < 1e-9);
    CHECK(std::abs(b.norm() - 1.0) < 1e-9);
    CHECK(std::abs(expectation(H, a) - e0) < 1e-9);
  }
  LHF_CHECK_RAISES(evolve_exact(2.0 * psi, H, 1.0, c), PreconditionFailed);
  LHF_CHECK_RAISES(dense.apply(VectorXcd::Zero(3), 1.0), DimensionMismatch);
}

TEST_CASE("Krylov path on a random dim-20 Hermitian matrix") {
  Rng rng(61);
  const MatrixXcd A = test::random_hermitian(rng, 20);
  const SparseMatrixXcd H = A.sparseView();
  const VectorXcd psi = test::random_unit_vector(rng, 20);
  const Propagator dense(H, 1.0), krylov(H, 1.0, 0);
  for (double t : {0.1, 2.0, 10.0}) CHECK((dense.apply(psi, t) - krylov.apply(psi, t)).norm() < 1e-8);
  // Dense oracle built here.
  const Eigen::SelfAdjointEigenSolver<MatrixXcd> es(A);
  const VectorXcd ref = es.eigenvectors() *
                        (es.eigenvalues().unaryExpr([](double l) { return std::exp(cplx(0.0, -2.0 * l)); }).asDiagonal() *
                         (es.eigenvectors().adjoint() * psi));
  CHECK((krylov.apply(psi, 2.0) - ref).norm() < 1e-8);
}
