// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "subpixreg/affine.hpp"

#include "subpixreg/spline.hpp"

#include <cmath>
#include <stdexcept>

namespace subpixreg {

RigidParams to_rigid_params(const AffineTransform& t) {
  RigidParams p;
  p.tx = t.translation.x();
  p.ty = t.translation.y();
  p.theta = std::atan2(t.linear(1, 0), t.linear(0, 0));
  return p;
}

int parameter_count(MotionModel model) {
  switch (model) {
    case MotionModel::TranslationOnly:
      return 2;
    case MotionModel::Rigid:
      return 3;
    case MotionModel::FullAffine:
      return 6;
  }
  throw std::logic_error("parameter_count: unknown motion model");
}

AffineTransform transform_from_params(MotionModel model,
                                      const Eigen::VectorXd& p) {
  if (p.size() != parameter_count(model)) {
    throw std::invalid_argument("transform_from_params: expected " +
                                std::to_string(parameter_count(model)) +
                                " parameters, got " + std::to_string(p.size()));
  }
  switch (model) {
    case MotionModel::TranslationOnly:
      return AffineTransform::translation_only(p[0], p[1]);
    case MotionModel::Rigid:
      return AffineTransform::rigid(p[0], p[1], p[2]);
    case MotionModel::FullAffine: {
      AffineTransform t;
      t.linear << p[0], p[1], p[2], p[3];
      t.translation << p[4], p[5];
      return t;
    }
  }
  throw std::logic_error("transform_from_params: unknown motion model");
}

Eigen::VectorXd params_from_transform(MotionModel model,
                                      const AffineTransform& t) {
  Eigen::VectorXd p(parameter_count(model));
  switch (model) {
    case MotionModel::TranslationOnly:
      p << t.translation.x(), t.translation.y();
      return p;
    case MotionModel::Rigid: {
      const RigidParams r = to_rigid_params(t);
      p << r.tx, r.ty, r.theta;
      return p;
    }
    case MotionModel::FullAffine:
      p << t.linear(0, 0), t.linear(0, 1), t.linear(1, 0), t.linear(1, 1),
          t.translation.x(), t.translation.y();
      return p;
  }
  throw std::logic_error("params_from_transform: unknown motion model");
}

AffineTransform compose(const AffineTransform& t2, const AffineTransform& t1) {
  AffineTransform out;
  out.linear = t2.linear * t1.linear;
  out.translation = t2.linear * t1.translation + t2.translation;
  return out;
}

AffineTransform invert(const AffineTransform& t) {
  const double det = t.linear.determinant();
  if (std::abs(det) <= 1e-9) {
    throw std::invalid_argument(
        "invert: linear part is singular (|det| = " + std::to_string(det) +
        ")");
  }
  AffineTransform out;
  out.linear << t.linear(1, 1), -t.linear(0, 1), -t.linear(1, 0),
      t.linear(0, 0);
  out.linear /= det;
  out.translation = -(out.linear * t.translation);
  return out;
}

AffineTransform rescale_to_level(const AffineTransform& t, int delta_levels) {
  AffineTransform out = t;
  out.translation *= std::ldexp(1.0, delta_levels);
  return out;
}

WarpResult warp_image(const Image& img, const AffineTransform& t) {
  const Eigen::Index w = img.cols();
  const Eigen::Index h = img.rows();
  if (w < 8 || h < 8) {
    throw std::invalid_argument("warp_image: image must be at least 8x8");
  }
  const CoefficientGrid grid = prefilter(img);
  const Eigen::Vector2d center((w - 1) / 2.0, (h - 1) / 2.0);

  WarpResult out;
  out.image = Image::Zero(h, w);
  out.valid = Mask::Constant(h, w, false);
  for (Eigen::Index y = 0; y < h; ++y) {
    for (Eigen::Index x = 0; x < w; ++x) {
      const Eigen::Vector2d q = apply_point(
          t, Eigen::Vector2d(static_cast<double>(x), static_cast<double>(y)),
          center);
      if (q.x() >= 0.0 && q.x() <= w - 1.0 && q.y() >= 0.0 &&
          q.y() <= h - 1.0) {
        out.image(y, x) = spline_eval(grid, q.x(), q.y()).value;
        out.valid(y, x) = true;
      }
    }
  }
  return out;
}

}  // namespace subpixreg
