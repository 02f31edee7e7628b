// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/many_body/determinant_basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lhf/core/error.hpp"

namespace lhf {

std::vector<int> occupied_indices(Occupation occ) {
  std::vector<int> out;
  out.reserve(std::size_t(std::popcount(occ)));
  while (occ) {
    out.push_back(std::countr_zero(occ));
    occ &= occ - 1;
  }
  return out;
}

double binomial(int K, int N) {
  if (N < 0 || N > K) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= N; ++i) c = c * (K - N + i) / i;
  return std::round(c);
}

DeterminantBasis::DeterminantBasis(int K, int N, std::size_t cap) : K_(K), N_(N) {
  if (K < 1 || K > 64) raise(ErrorCode::TooLarge, "K=" + std::to_string(K) + " outside 1..64");
  if (N < 1 || N > K) raise(ErrorCode::InvalidValue, "N=" + std::to_string(N));
  const double count = binomial(K, N);
  if (count > double(cap))
    raise(ErrorCode::TooLarge, "C(" + std::to_string(K) + "," + std::to_string(N) + ") exceeds cap " + std::to_string(cap));

  binom_.assign(std::size_t(K + 1), std::vector<std::uint64_t>(std::size_t(N + 1), 0));
  for (int k = 0; k <= K; ++k) {
    binom_[k][0] = 1;
    for (int n = 1; n <= std::min(k, N); ++n) binom_[k][n] = binom_[k - 1][n - 1] + (n <= k - 1 ? binom_[k - 1][n] : 0);
  }

  states_.reserve(std::size_t(count));
  std::vector<int> c(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) c[i] = i;
  while (true) {
    Occupation occ = 0;
    for (int v : c) occ |= Occupation(1) << v;
    states_.push_back(occ);
    int i = N - 1;
    while (i >= 0 && c[i] == K - N + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < N; ++j) c[j] = c[j - 1] + 1;
  }
}

Eigen::Index DeterminantBasis::index(Occupation occ) const {
  if (std::popcount(occ) != N_) return -1;
  if (K_ < 64 && (occ >> K_) != 0) return -1;
  // Lexicographic rank: for each position, count the tuples that share the
  // prefix and carry a smaller value there.
  std::uint64_t rank = 0;
  int prev = -1, pos = 0;
  for (Occupation rest = occ; rest; rest &= rest - 1, ++pos) {
    const int v = std::countr_zero(rest);
    for (int u = prev + 1; u < v; ++u) rank += binom_[std::size_t(K_ - 1 - u)][std::size_t(N_ - 1 - pos)];
    prev = v;
  }
  return Eigen::Index(rank);
}

DeterminantBasis enumerate_determinants(int K, int N, std::size_t cap) { return DeterminantBasis(K, N, cap); }

}  // namespace lhf
