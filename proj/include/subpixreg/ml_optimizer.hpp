// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBPIXREG_ML_OPTIMIZER_HPP
#define SUBPIXREG_ML_OPTIMIZER_HPP

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace subpixreg {

/// One residual/Jacobian evaluation. jacobian(i, k) = d residuals(i) / d p(k).
struct Evaluation {
  Eigen::VectorXd residuals;
  Eigen::MatrixXd jacobian;
};

/// Evaluation contract for damped least-squares minimization. evaluate()
/// returns nullopt when the residuals cannot be formed at p (for example a
/// trial step left the valid domain); the optimizer treats that like a
/// cost increase and raises the damping.
class LeastSquaresProblem {
 public:
  virtual ~LeastSquaresProblem() = default;
  virtual int parameter_count() const = 0;
  virtual std::optional<Evaluation> evaluate(const Eigen::VectorXd& p) const = 0;
};

struct MLConfig {
  double lambda0 = 1e-3;     // initial damping
  double lambda_up = 10.0;   // factor on rejected step
  double lambda_down = 0.1;  // factor on accepted step
  int max_iters = 50;        // accepted-iteration budget
  double step_tol = 1e-7;    // max |delta p| convergence threshold
  double cost_tol = 1e-9;    // relative cost-decrease convergence threshold
};

enum class MLStopReason {
  StepTol,
  CostTol,
  MaxIters,
  NonFiniteStart,  // residuals not evaluable/finite at p0
  LambdaMax,       // damping escalation exhausted without an acceptable step
};

std::string to_string(MLStopReason reason);

struct MLIterationRecord {
  int iteration = 0;
  double lambda = 0.0;
  double cost = 0.0;  // cost after this accepted step
  double step_norm = 0.0;
  Eigen::VectorXd params;
};

struct MLOutcome {
  Eigen::VectorXd params;
  double cost = 0.0;  // final 0.5 * ||r||^2
  int iterations = 0;
  bool converged = false;
  MLStopReason reason = MLStopReason::MaxIters;
  std::vector<MLIterationRecord> trace;
};

/// Marquardt-Levenberg minimization of 0.5 * ||r(p)||^2. Each iteration
/// solves (J^T J + lambda * diag(J^T J)) delta = -J^T r and accepts the
/// step iff the cost strictly decreases; the accepted-cost sequence is
/// therefore monotone. Deterministic for fixed inputs.
MLOutcome minimize(const LeastSquaresProblem& problem,
                   const Eigen::VectorXd& p0, const MLConfig& cfg);

/// Max relative deviation between the problem's Jacobian and a central
/// finite-difference Jacobian at p; probe hook for tests.
double jacobian_probe_error(const LeastSquaresProblem& problem,
                            const Eigen::VectorXd& p, double h = 1e-6);

}  // namespace subpixreg

#endif  // SUBPIXREG_ML_OPTIMIZER_HPP
