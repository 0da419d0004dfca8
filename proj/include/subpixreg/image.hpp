// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBPIXREG_IMAGE_HPP
#define SUBPIXREG_IMAGE_HPP

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace subpixreg {

/// Dense grayscale image, row-major, origin at the top-left corner.
/// x runs rightward along columns, y downward along rows, so a pixel is
/// addressed as img(y, x). Intensities are real-valued detector counts;
/// every operation in the library keeps them finite.
template <typename Scalar>
using ImageT = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Image = ImageT<double>;

/// Per-pixel validity flags, same layout as Image.
using Mask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::Index width(const Image& img) { return img.cols(); }
inline Eigen::Index height(const Image& img) { return img.rows(); }

/// Rectangular window into a parent image, in parent pixel coordinates.
struct RegionSpec {
  std::string name;
  int origin_x = 0;
  int origin_y = 0;
  int width = 0;
  int height = 0;
};

struct ImageStats {
  double mean = 0.0;
  double stddev = 0.0;  // population convention (divide by N)
  double min = 0.0;
  double max = 0.0;
};

/// Copies the window described by `spec` out of `img`. Throws
/// std::out_of_range if the window does not fit inside the parent.
Image extract_region(const Image& img, const RegionSpec& spec);

ImageStats image_stats(const Image& img);

/// True iff every pixel is finite.
bool all_finite(const Image& img);

}  // namespace subpixreg

#endif  // SUBPIXREG_IMAGE_HPP
