// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/core/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "core/fft.hpp"
#include "lhf/core/error.hpp"

namespace lhf {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Fourier coefficients below this fraction of the largest are dropped.
constexpr double kModeCutoff = 1e-16;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double wrap_centered(double d, double L) { return d - L * std::floor(d / L + 0.5); }

double gaussian_value(const PeriodicGaussian& g, double d1, double d2, double L1, double L2) {
  d1 = wrap_centered(d1, L1);
  d2 = wrap_centered(d2, L2);
  const int n1 = int(std::ceil(8.0 * g.sigma / L1)) + 1;
  const int n2 = int(std::ceil(8.0 * g.sigma / L2)) + 1;
  const double inv = 1.0 / (2.0 * g.sigma * g.sigma);
  double sum = 0.0;
  for (int l1 = -n1; l1 <= n1; ++l1) {
    const double e1 = d1 + l1 * L1;
    for (int l2 = -n2; l2 <= n2; ++l2) {
      const double e2 = d2 + l2 * L2;
      sum += std::exp(-(e1 * e1 + e2 * e2) * inv);
    }
  }
  return g.strength * sum;
}

int displacement_index(double d, double L, int G) {
  const long k = std::lround(d / (L / G));
  return int(((k % G) + G) % G);
}

}  // namespace

PotentialSpec::PotentialSpec(Kind kind, double L1, double L2)
    : kind_(std::move(kind)), L1_(L1), L2_(L2) {
  if (!(L1 > 0.0) || !(L2 > 0.0)) raise(ErrorCode::InvalidValue, "potential box");
  if (auto* g = std::get_if<PeriodicGaussian>(&kind_); g && !(g->sigma > 0.0))
    raise(ErrorCode::InvalidValue, "sigma");
  if (auto* t = std::get_if<TabulatedKernel>(&kind_); t && t->table.size() == 0)
    raise(ErrorCode::InvalidValue, "table");
}

std::string_view PotentialSpec::kind_name() const {
  return std::visit(overloaded{
                        [](const ZeroKernel&) { return std::string_view("zero"); },
                        [](const SeparableCosine&) { return std::string_view("separable-cosine"); },
                        [](const PeriodicGaussian&) { return std::string_view("periodic-gaussian"); },
                        [](const TabulatedKernel&) { return std::string_view("tabulated"); },
                    },
                    kind_);
}

bool PotentialSpec::is_zero() const {
  return std::visit(overloaded{
                        [](const ZeroKernel&) { return true; },
                        [](const SeparableCosine& c) { return c.strength == 0.0; },
                        [](const PeriodicGaussian& g) { return g.strength == 0.0; },
                        [](const TabulatedKernel& t) { return t.table.cwiseAbs().maxCoeff() == 0.0; },
                    },
                    kind_);
}

double PotentialSpec::operator()(double x1, double x2, double y1, double y2) const {
  return std::visit(
      overloaded{
          [](const ZeroKernel&) { return 0.0; },
          [&](const SeparableCosine& c) {
            const double k1 = kTwoPi * c.p1 / L1_, k2 = kTwoPi * c.p2 / L2_;
            return c.strength * std::cos(k1 * x1 + k2 * x2) * std::cos(k1 * y1 + k2 * y2);
          },
          [&](const PeriodicGaussian& g) { return gaussian_value(g, x1 - y1, x2 - y2, L1_, L2_); },
          [&](const TabulatedKernel& t) {
            const int G1 = int(t.table.rows()), G2 = int(t.table.cols());
            return t.table(displacement_index(x1 - y1, L1_, G1), displacement_index(x2 - y2, L2_, G2));
          },
      },
      kind_);
}

double PotentialSpec::sup_norm(const Grid& grid) const {
  return std::visit(
      overloaded{
          [](const ZeroKernel&) { return 0.0; },
          [&](const SeparableCosine& c) {
            const double k1 = kTwoPi * c.p1 / L1_, k2 = kTwoPi * c.p2 / L2_;
            double best = 0.0;
            for (int i = 0; i < grid.G1(); ++i)
              for (int j = 0; j < grid.G2(); ++j)
                best = std::max(best, std::abs(std::cos(k1 * grid.x1(i) + k2 * grid.x2(j))));
            return std::abs(c.strength) * best * best;
          },
          [&](const PeriodicGaussian& g) {
            double best = 0.0;
            for (int k1 = 0; k1 < grid.G1(); ++k1)
              for (int k2 = 0; k2 < grid.G2(); ++k2)
                best = std::max(best, std::abs(gaussian_value(g, k1 * grid.h1(), k2 * grid.h2(), L1_, L2_)));
            return best;
          },
          [](const TabulatedKernel& t) { return t.table.cwiseAbs().maxCoeff(); },
      },
      kind_);
}

double PotentialSpec::symmetry_defect(const Grid& grid, int samples) const {
  if (const auto* t = std::get_if<TabulatedKernel>(&kind_)) {
    const Eigen::Index G1 = t->table.rows(), G2 = t->table.cols();
    double worst = 0.0;
    for (Eigen::Index k1 = 0; k1 < G1; ++k1)
      for (Eigen::Index k2 = 0; k2 < G2; ++k2)
        worst = std::max(worst, std::abs(t->table(k1, k2) - t->table((G1 - k1) % G1, (G2 - k2) % G2)));
    return worst;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> d1(0, grid.G1() - 1), d2(0, grid.G2() - 1);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double x1 = grid.x1(d1(rng)), x2 = grid.x2(d2(rng));
    const double y1 = grid.x1(d1(rng)), y2 = grid.x2(d2(rng));
    worst = std::max(worst, std::abs((*this)(x1, x2, y1, y2) - (*this)(y1, y2, x1, x2)));
  }
  return worst;
}

KernelExpansion PotentialSpec::expansion(const Grid& grid) const {
  KernelExpansion out;
  std::visit(
      overloaded{
          [](const ZeroKernel&) {},
          [&](const SeparableCosine& c) {
            const double k1 = kTwoPi * c.p1 / L1_, k2 = kTwoPi * c.p2 / L2_;
            MatrixXcd g(grid.G1(), grid.G2());
            for (int j = 0; j < grid.G2(); ++j)
              for (int i = 0; i < grid.G1(); ++i) g(i, j) = std::cos(k1 * grid.x1(i) + k2 * grid.x2(j));
            out.separable.push_back({cplx(c.strength), g, g});
          },
          [&](const PeriodicGaussian& g) {
            const double reach = std::sqrt(-2.0 * std::log(kModeCutoff)) / g.sigma;
            const int J1 = int(std::ceil(reach * L1_ / kTwoPi));
            const int J2 = int(std::ceil(reach * L2_ / kTwoPi));
            if (2 * J1 >= grid.G1() || 2 * J2 >= grid.G2())
              raise(ErrorCode::GridTooCoarse, "periodic-gaussian needs more than " +
                                                  std::to_string(2 * J1) + "x" + std::to_string(2 * J2) +
                                                  " grid points");
            const double w0 = g.strength * kTwoPi * g.sigma * g.sigma / (L1_ * L2_);
            for (int j1 = -J1; j1 <= J1; ++j1)
              for (int j2 = -J2; j2 <= J2; ++j2) {
                const double q1 = kTwoPi * j1 / L1_, q2 = kTwoPi * j2 / L2_;
                const double decay = std::exp(-0.5 * g.sigma * g.sigma * (q1 * q1 + q2 * q2));
                if (decay < kModeCutoff) continue;
                out.modes.push_back({j1, j2, cplx(w0 * decay)});
              }
          },
          [&](const TabulatedKernel& t) {
            if (t.table.rows() != grid.G1() || t.table.cols() != grid.G2())
              raise(ErrorCode::GridMismatch, "tabulated kernel is " + std::to_string(t.table.rows()) +
                                                 "x" + std::to_string(t.table.cols()));
            const MatrixXcd coeffs = detail::fft2(t.table.cast<cplx>(), true) / double(grid.size());
            const double cutoff = kModeCutoff * coeffs.cwiseAbs().maxCoeff();
            for (int k1 = 0; k1 < grid.G1(); ++k1)
              for (int k2 = 0; k2 < grid.G2(); ++k2) {
                if (std::abs(coeffs(k1, k2)) <= cutoff) continue;
                out.modes.push_back({detail::signed_frequency(k1, grid.G1()),
                                     detail::signed_frequency(k2, grid.G2()), coeffs(k1, k2)});
              }
          },
      },
      kind_);
  return out;
}

PotentialSpec PotentialSpec::scaled(double factor) const {
  Kind k = std::visit(overloaded{
                          [](const ZeroKernel& z) -> Kind { return z; },
                          [&](SeparableCosine c) -> Kind { c.strength *= factor; return c; },
                          [&](PeriodicGaussian g) -> Kind { g.strength *= factor; return g; },
                          [&](TabulatedKernel t) -> Kind { t.table *= factor; return t; },
                      },
                      kind_);
  return PotentialSpec(std::move(k), L1_, L2_);
}

MatrixXd read_kernel_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::IoFailure, path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::vector<double> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) raise(ErrorCode::MalformedConfig, path + ": bad number '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) raise(ErrorCode::MalformedConfig, path + ": empty table");
  MatrixXd table(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size())
      raise(ErrorCode::MalformedConfig, path + ": ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < rows[r].size(); ++c) table(Eigen::Index(r), Eigen::Index(c)) = rows[r][c];
  }
  return table;
}

}  // namespace lhf
