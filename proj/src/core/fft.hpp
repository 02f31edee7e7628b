// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <unsupported/Eigen/FFT>

#include "lhf/core/types.hpp"

namespace lhf::detail {

/// Unscaled 2D transform along both axes.
/// forward: X(k) = sum_n x(n) exp(-2 pi i k.n / G); otherwise the + sign.
inline MatrixXcd fft2(const MatrixXcd& in, bool forward) {
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  MatrixXcd out(in.rows(), in.cols());
  VectorXcd src, dst;
  for (Eigen::Index c = 0; c < in.cols(); ++c) {
    src = in.col(c);
    if (forward) fft.fwd(dst, src); else fft.inv(dst, src);
    out.col(c) = dst;
  }
  for (Eigen::Index r = 0; r < in.rows(); ++r) {
    src = out.row(r).transpose();
    if (forward) fft.fwd(dst, src); else fft.inv(dst, src);
    out.row(r) = dst.transpose();
  }
  return out;
}

/// Signed frequency of DFT bin k for length G, in [-G/2, G/2).
inline int signed_frequency(int k, int G) { return k < (G + 1) / 2 ? k : k - G; }

/// DFT bin of signed frequency j.
inline int frequency_bin(int j, int G) { return ((j % G) + G) % G; }

}  // namespace lhf::detail
