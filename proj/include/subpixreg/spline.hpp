// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBPIXREG_SPLINE_HPP
#define SUBPIXREG_SPLINE_HPP

#include "subpixreg/image.hpp"

#include <cmath>
#include <stdexcept>

namespace subpixreg {

/// Cubic B-spline kernel, support [-2, 2], unit integral.
template <typename Scalar>
inline Scalar cubic_bspline(Scalar t) {
  const Scalar a = std::abs(t);
  if (a < Scalar(1)) {
    return Scalar(2) / Scalar(3) - a * a + a * a * a / Scalar(2);
  }
  if (a < Scalar(2)) {
    const Scalar u = Scalar(2) - a;
    return u * u * u / Scalar(6);
  }
  return Scalar(0);
}

/// Derivative of the cubic B-spline kernel with respect to t.
template <typename Scalar>
inline Scalar cubic_bspline_deriv(Scalar t) {
  const Scalar a = std::abs(t);
  Scalar d;
  if (a < Scalar(1)) {
    d = a * (Scalar(1.5) * a - Scalar(2));
  } else if (a < Scalar(2)) {
    const Scalar u = Scalar(2) - a;
    d = -u * u / Scalar(2);
  } else {
    return Scalar(0);
  }
  return t < Scalar(0) ? -d : d;
}

/// Whole-sample symmetric mirror: reflects i into [0, n-1] with period
/// 2n-2 (the boundary sample is not repeated).
inline Eigen::Index mirror_index(Eigen::Index i, Eigen::Index n) {
  if (n == 1) return 0;
  const Eigen::Index period = 2 * (n - 1);
  i = i % period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

/// B-spline coefficients of the interpolating cubic spline of an image.
/// Evaluating the spline at integer grid points reproduces the source
/// pixels; the grid has the same dimensions as the source.
struct CoefficientGrid {
  Image coeffs;

  Eigen::Index width() const { return coeffs.cols(); }
  Eigen::Index height() const { return coeffs.rows(); }
};

/// Computes cubic B-spline interpolation coefficients with the recursive
/// causal/anti-causal filter pair (pole sqrt(3)-2) and whole-sample mirror
/// boundaries. Requires width and height >= 4.
CoefficientGrid prefilter(const Image& img);

/// In-place 1D version of the coefficient filter; exposed for tests.
void prefilter_line(double* c, Eigen::Index n);

struct SplineSample {
  double value = 0.0;
  double ddx = 0.0;
  double ddy = 0.0;
};

/// Evaluates the spline and its spatial gradient at real coordinates.
/// (x, y) must lie inside [0, w-1] x [0, h-1].
inline SplineSample spline_eval(const CoefficientGrid& grid, double x,
                                double y) {
  const Eigen::Index w = grid.width();
  const Eigen::Index h = grid.height();
  if (!(x >= 0.0 && x <= static_cast<double>(w - 1) && y >= 0.0 &&
        y <= static_cast<double>(h - 1))) {
    throw std::domain_error("spline_eval: query (" + std::to_string(x) + "," +
                            std::to_string(y) + ") outside [0," +
                            std::to_string(w - 1) + "]x[0," +
                            std::to_string(h - 1) + "]");
  }

  const Eigen::Index ix = static_cast<Eigen::Index>(std::floor(x));
  const Eigen::Index iy = static_cast<Eigen::Index>(std::floor(y));
  const double tx = x - static_cast<double>(ix);
  const double ty = y - static_cast<double>(iy);

  double wx[4], wy[4], dwx[4], dwy[4];
  Eigen::Index col[4], row[4];
  for (int k = 0; k < 4; ++k) {
    const double ax = tx + 1.0 - k;
    const double ay = ty + 1.0 - k;
    wx[k] = cubic_bspline(ax);
    wy[k] = cubic_bspline(ay);
    dwx[k] = cubic_bspline_deriv(ax);
    dwy[k] = cubic_bspline_deriv(ay);
    col[k] = mirror_index(ix - 1 + k, w);
    row[k] = mirror_index(iy - 1 + k, h);
  }

  SplineSample s;
  for (int j = 0; j < 4; ++j) {
    double v = 0.0, g = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double c = grid.coeffs(row[j], col[i]);
      v += wx[i] * c;
      g += dwx[i] * c;
    }
    s.value += wy[j] * v;
    s.ddx += wy[j] * g;
    s.ddy += dwy[j] * v;
  }
  return s;
}

}  // namespace subpixreg

#endif  // SUBPIXREG_SPLINE_HPP
