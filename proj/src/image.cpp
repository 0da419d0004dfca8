// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "subpixreg/image.hpp"

#include <cmath>

namespace subpixreg {

Image extract_region(const Image& img, const RegionSpec& spec) {
  if (spec.width < 1 || spec.height < 1) {
    throw std::out_of_range("extract_region: region '" + spec.name +
                            "' has empty extent");
  }
  if (spec.origin_x < 0 || spec.origin_y < 0 ||
      spec.origin_x + spec.width > img.cols() ||
      spec.origin_y + spec.height > img.rows()) {
    throw std::out_of_range(
        "extract_region: region '" + spec.name + "' (" +
        std::to_string(spec.origin_x) + "," + std::to_string(spec.origin_y) +
        " " + std::to_string(spec.width) + "x" + std::to_string(spec.height) +
        ") does not fit in " + std::to_string(img.cols()) + "x" +
        std::to_string(img.rows()) + " image");
  }
  return img.block(spec.origin_y, spec.origin_x, spec.height, spec.width);
}

ImageStats image_stats(const Image& img) {
  ImageStats s;
  s.mean = img.mean();
  s.stddev = std::sqrt((img - s.mean).square().mean());
  s.min = img.minCoeff();
  s.max = img.maxCoeff();
  return s;
}

bool all_finite(const Image& img) { return img.isFinite().all(); }

}  // namespace subpixreg
