// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "subpixreg/pyramid.hpp"

#include "subpixreg/spline.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace subpixreg {

namespace {

// Two-scale pair of the cubic B-spline: reduction filter has unit DC gain,
// the expansion filter applied after zero insertion has gain 2 per axis.
constexpr std::array<double, 5> kReduce = {1.0 / 16, 4.0 / 16, 6.0 / 16,
                                           4.0 / 16, 1.0 / 16};
// Modulated mirror of kReduce; zero DC gain.
constexpr std::array<double, 5> kHighPass = {1.0 / 16, -4.0 / 16, 6.0 / 16,
                                             -4.0 / 16, 1.0 / 16};

// Centered 5-tap filter along x, keeping even samples. Halves the width.
Image filter_decimate_x(const Image& img, const std::array<double, 5>& taps) {
  const Eigen::Index w = img.cols();
  const Eigen::Index h = img.rows();
  Image out(h, w / 2);
  for (Eigen::Index y = 0; y < h; ++y) {
    for (Eigen::Index j = 0; j < w / 2; ++j) {
      double acc = 0.0;
      for (int k = -2; k <= 2; ++k) {
        acc += taps[k + 2] * img(y, mirror_index(2 * j + k, w));
      }
      out(y, j) = acc;
    }
  }
  return out;
}

Image filter_decimate_y(const Image& img, const std::array<double, 5>& taps) {
  const Eigen::Index w = img.cols();
  const Eigen::Index h = img.rows();
  Image out(h / 2, w);
  for (Eigen::Index j = 0; j < h / 2; ++j) {
    for (Eigen::Index x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = -2; k <= 2; ++k) {
        acc += taps[k + 2] * img(mirror_index(2 * j + k, h), x);
      }
      out(j, x) = acc;
    }
  }
  return out;
}

void require_even(const Image& img, const char* op) {
  if (img.cols() % 2 != 0 || img.rows() % 2 != 0) {
    throw std::invalid_argument(std::string(op) +
                                ": dimensions must be even, got " +
                                std::to_string(img.cols()) + "x" +
                                std::to_string(img.rows()));
  }
}

}  // namespace

Image reduce(const Image& img) {
  require_even(img, "reduce");
  return filter_decimate_y(filter_decimate_x(img, kReduce), kReduce);
}

Image expand(const Image& img) {
  const Eigen::Index w = img.cols();
  const Eigen::Index h = img.rows();

  // Zero-stuffed convolution with [1 4 6 4 1]/8, written directly: even
  // outputs see taps {1,6,1}/8, odd outputs see {4,4}/8.
  Image wide(h, 2 * w);
  for (Eigen::Index y = 0; y < h; ++y) {
    for (Eigen::Index x = 0; x < w; ++x) {
      const double left = img(y, mirror_index(x - 1, w));
      const double mid = img(y, x);
      const double right = img(y, mirror_index(x + 1, w));
      wide(y, 2 * x) = (left + 6.0 * mid + right) / 8.0;
      wide(y, 2 * x + 1) = (mid + right) / 2.0;
    }
  }
  Image out(2 * h, 2 * w);
  for (Eigen::Index x = 0; x < 2 * w; ++x) {
    for (Eigen::Index y = 0; y < h; ++y) {
      const double up = wide(mirror_index(y - 1, h), x);
      const double mid = wide(y, x);
      const double down = wide(mirror_index(y + 1, h), x);
      out(2 * y, x) = (up + 6.0 * mid + down) / 8.0;
      out(2 * y + 1, x) = (mid + down) / 2.0;
    }
  }
  return out;
}

SplinePyramid build_pyramid(const Image& img, int depth) {
  if (depth < 1) {
    throw std::invalid_argument("build_pyramid: depth must be >= 1");
  }
  const Eigen::Index divisor = Eigen::Index(1) << depth;
  if (img.cols() % divisor != 0 || img.rows() % divisor != 0) {
    throw std::invalid_argument(
        "build_pyramid: " + std::to_string(img.cols()) + "x" +
        std::to_string(img.rows()) + " image dimensions must be divisible by " +
        std::to_string(divisor) + " for depth " + std::to_string(depth));
  }
  const Eigen::Index guard = Eigen::Index(1) << (depth - 1);
  if (img.cols() / guard < 16 || img.rows() / guard < 16) {
    throw std::invalid_argument(
        "build_pyramid: depth " + std::to_string(depth) +
        " would shrink level " + std::to_string(depth - 1) +
        " below the 16x16 floor");
  }

  SplinePyramid pyr;
  pyr.depth = depth;
  pyr.levels.reserve(static_cast<std::size_t>(depth) + 1);
  pyr.levels.push_back(img);
  for (int k = 0; k < depth; ++k) {
    pyr.levels.push_back(reduce(pyr.levels.back()));
  }
  return pyr;
}

WaveletBands wavelet_decompose(const Image& img) {
  require_even(img, "wavelet_decompose");
  const Image low_x = filter_decimate_x(img, kReduce);
  const Image high_x = filter_decimate_x(img, kHighPass);
  WaveletBands bands;
  bands.ll = filter_decimate_y(low_x, kReduce);
  bands.lh = filter_decimate_y(low_x, kHighPass);
  bands.hl = filter_decimate_y(high_x, kReduce);
  bands.hh = filter_decimate_y(high_x, kHighPass);
  return bands;
}

}  // namespace subpixreg
