// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/core/grid.hpp"

#include <cmath>
#include <string>

#include "lhf/core/error.hpp"

namespace lhf {

Grid::Grid(int G1, int G2, double L1, double L2) : G1_(G1), G2_(G2), L1_(L1), L2_(L2) {
  if (G1 < 1) raise(ErrorCode::InvalidValue, "G1");
  if (G2 < 1) raise(ErrorCode::InvalidValue, "G2");
  if (!(L1 > 0.0)) raise(ErrorCode::InvalidValue, "L1");
  if (!(L2 > 0.0)) raise(ErrorCode::InvalidValue, "L2");
}

OrbitalField::OrbitalField(Grid g, MatrixXcd v, std::optional<OrbitalLabel> l)
    : grid(g), values(std::move(v)), label(l) {
  if (values.rows() != grid.G1() || values.cols() != grid.G2())
    raise(ErrorCode::GridMismatch, "sample matrix is " + std::to_string(values.rows()) +
                                       "x" + std::to_string(values.cols()));
}

cplx inner_product(const OrbitalField& f, const OrbitalField& g) {
  if (!(f.grid == g.grid)) raise(ErrorCode::GridMismatch, "inner_product");
  return inner_product(f.values, g.values, f.grid);
}

double l2_norm(const OrbitalField& f) {
  return std::sqrt(f.values.squaredNorm() * f.grid.weight());
}

}  // namespace lhf
