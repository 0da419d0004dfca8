// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBPIXREG_PYRAMID_HPP
#define SUBPIXREG_PYRAMID_HPP

#include "subpixreg/image.hpp"

#include <vector>

namespace subpixreg {

/// Multiresolution hierarchy of low-pass images. levels[0] is the source
/// at full resolution and levels[k] has dimensions (w/2^k, h/2^k); the
/// list holds depth+1 images.
struct SplinePyramid {
  std::vector<Image> levels;
  int depth = 0;
};

/// One analysis level of the separable filter bank. Band names give the
/// filter applied along x then y: HL is high-pass in x and low-pass in y,
/// so it concentrates the energy of vertical edges.
struct WaveletBands {
  Image ll;
  Image lh;
  Image hl;
  Image hh;
};

/// Low-pass filters rows then columns with the cubic-spline reduction
/// kernel (unit DC gain) and decimates by 2. Dimensions must be even;
/// boundaries are whole-sample mirrored.
Image reduce(const Image& img);

/// Upsamples by 2 with zero insertion and convolves with the matched
/// interpolation kernel (DC gain 2 per axis), so constants are preserved.
/// Output dimensions are doubled.
Image expand(const Image& img);

/// Builds the reduce-based pyramid. Width and height must be divisible by
/// 2^depth and the level depth-1 images must be at least 16x16.
SplinePyramid build_pyramid(const Image& img, int depth);

/// One dyadic decomposition step: the spline low-pass filter and its
/// modulated high-pass complement along each axis, decimated by 2.
/// The LL band is bit-identical to reduce(img).
WaveletBands wavelet_decompose(const Image& img);

}  // namespace subpixreg

#endif  // SUBPIXREG_PYRAMID_HPP
