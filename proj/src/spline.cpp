// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "subpixreg/spline.hpp"

#include <limits>
#include <vector>

namespace subpixreg {

namespace {

constexpr double kPole = -0.26794919243112270647;  // sqrt(3) - 2
constexpr double kGain = 6.0;                      // (1-z)(1-1/z)

// Sum of the causal recursion over the mirrored extension of the signal.
double initial_causal(const double* c, Eigen::Index n, double z) {
  const double tol = std::numeric_limits<double>::epsilon();
  Eigen::Index horizon =
      2 + static_cast<Eigen::Index>(std::log(tol) / std::log(std::abs(z)));
  if (horizon < n) {
    double zn = z;
    double sum = c[0];
    for (Eigen::Index i = 1; i < horizon; ++i) {
      sum += zn * c[i];
      zn *= z;
    }
    return sum;
  }
  // Exact closed form over the full period 2n-2.
  double zn = z;
  const double iz = 1.0 / z;
  double z2n = std::pow(z, static_cast<double>(n - 1));
  double sum = c[0] + z2n * c[n - 1];
  z2n = z2n * z2n * iz;
  for (Eigen::Index i = 1; i <= n - 2; ++i) {
    sum += (zn + z2n) * c[i];
    zn *= z;
    z2n *= iz;
  }
  return sum / (1.0 - zn * zn);
}

double initial_anticausal(const double* c, Eigen::Index n, double z) {
  return (z / (z * z - 1.0)) * (z * c[n - 2] + c[n - 1]);
}

}  // namespace

void prefilter_line(double* c, Eigen::Index n) {
  if (n == 1) return;
  for (Eigen::Index i = 0; i < n; ++i) c[i] *= kGain;
  c[0] = initial_causal(c, n, kPole);
  for (Eigen::Index i = 1; i < n; ++i) c[i] += kPole * c[i - 1];
  c[n - 1] = initial_anticausal(c, n, kPole);
  for (Eigen::Index i = n - 2; i >= 0; --i) {
    c[i] = kPole * (c[i + 1] - c[i]);
  }
}

CoefficientGrid prefilter(const Image& img) {
  const Eigen::Index w = img.cols();
  const Eigen::Index h = img.rows();
  if (w < 4 || h < 4) {
    throw std::invalid_argument("prefilter: image must be at least 4x4, got " +
                                std::to_string(w) + "x" + std::to_string(h));
  }

  CoefficientGrid grid{img};
  // Rows first (contiguous in row-major storage), then columns.
  for (Eigen::Index y = 0; y < h; ++y) {
    prefilter_line(grid.coeffs.data() + y * w, w);
  }
  std::vector<double> column(h);
  for (Eigen::Index x = 0; x < w; ++x) {
    for (Eigen::Index y = 0; y < h; ++y) column[y] = grid.coeffs(y, x);
    prefilter_line(column.data(), h);
    for (Eigen::Index y = 0; y < h; ++y) grid.coeffs(y, x) = column[y];
  }
  return grid;
}

}  // namespace subpixreg
