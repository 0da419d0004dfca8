// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBPIXREG_AFFINE_HPP
#define SUBPIXREG_AFFINE_HPP

#include "subpixreg/image.hpp"

#include <Eigen/Dense>

namespace subpixreg {

/// 2D affine map y = A(p - c) + c + t, where the pivot c is supplied at
/// application time. Composition and inversion are pivot-independent as
/// long as both operands share the pivot.
struct AffineTransform {
  Eigen::Matrix2d linear = Eigen::Matrix2d::Identity();
  Eigen::Vector2d translation = Eigen::Vector2d::Zero();

  static AffineTransform identity() { return {}; }

  static AffineTransform translation_only(double tx, double ty) {
    AffineTransform t;
    t.translation << tx, ty;
    return t;
  }

  /// Rotation by theta (radians, counterclockwise for y-down pixel
  /// coordinates this maps +x toward +y) followed by translation.
  static AffineTransform rigid(double tx, double ty, double theta) {
    AffineTransform t;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    t.linear << c, -s, s, c;
    t.translation << tx, ty;
    return t;
  }
};

struct RigidParams {
  double tx = 0.0;
  double ty = 0.0;
  double theta = 0.0;  // radians
};

/// Extracts (tx, ty, theta); theta is atan2(a21, a11), exact for rigid
/// transforms and the polar angle of the linear part otherwise.
RigidParams to_rigid_params(const AffineTransform& t);

enum class MotionModel { TranslationOnly, Rigid, FullAffine };

int parameter_count(MotionModel model);

/// Parameter layout: TranslationOnly (tx, ty); Rigid (tx, ty, theta);
/// FullAffine (a11, a12, a21, a22, tx, ty).
AffineTransform transform_from_params(MotionModel model,
                                      const Eigen::VectorXd& p);
Eigen::VectorXd params_from_transform(MotionModel model,
                                      const AffineTransform& t);

inline Eigen::Vector2d apply_point(const AffineTransform& t,
                                   const Eigen::Vector2d& p,
                                   const Eigen::Vector2d& center) {
  return t.linear * (p - center) + center + t.translation;
}

/// apply(compose(t2, t1), p) == apply(t2, apply(t1, p)) for a shared pivot.
AffineTransform compose(const AffineTransform& t2, const AffineTransform& t1);

/// Throws std::invalid_argument when |det| <= 1e-9.
AffineTransform invert(const AffineTransform& t);

/// Moves a transform across pyramid levels: translation scales by
/// 2^delta_levels (one level finer doubles tx, ty), linear part unchanged.
AffineTransform rescale_to_level(const AffineTransform& t, int delta_levels);

struct WarpResult {
  Image image;
  Mask valid;
};

/// Backward-maps every output pixel through t (pivot at the image center
/// ((w-1)/2, (h-1)/2)) and samples the source spline there. Samples that
/// land outside the source domain are flagged invalid and left at zero.
WarpResult warp_image(const Image& img, const AffineTransform& t);

}  // namespace subpixreg

#endif  // SUBPIXREG_AFFINE_HPP
