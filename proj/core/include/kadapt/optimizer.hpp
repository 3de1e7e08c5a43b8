// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace kadapt {

using Objective = std::function<double(std::span<const double>)>;

struct OptimizerConfig {
  /// Iteration budget. One iteration is one optimizer step that costs exactly
  /// one new objective evaluation (simplex set-up, geometry or trust-region step).
  int max_iterations = 200;
  /// Final trust-region radius: the method stops once the radius has shrunk to
  /// this value and no further progress is possible at that scale.
  double f_tolerance = 1e-3;
  /// Starting trust-region radius / simplex edge, in radians.
  double initial_step = 0.1;

  void validate() const;
};

struct OptimizationOutcome {
  std::vector<double> best_parameters;
  double best_energy = 0.0;
  int n_evaluations = 0;
  int n_iterations = 0;
  bool converged = false;
  /// Best value seen after each iteration; non-increasing, size n_iterations.
  std::vector<double> best_trace;
};

/// Pluggable gradient-free minimiser.
class Optimizer {
 public:
  virtual ~Optimizer() = default;
  virtual std::string name() const = 0;
  virtual OptimizationOutcome minimize(const Objective& objective, std::span<const double> x0,
                                       const OptimizerConfig& config) const = 0;
};

/// Unconstrained linear-approximation trust-region method in the style of
/// Powell's COBYLA: a simplex of n+1 points defines a linear model, steps of
/// length rho go downhill on that model, degenerate simplices are repaired by
/// geometry steps, and rho is halved when neither helps.
class Cobyla final : public Optimizer {
 public:
  std::string name() const override { return "cobyla"; }
  OptimizationOutcome minimize(const Objective& objective, std::span<const double> x0,
                               const OptimizerConfig& config) const override;
};

/// Minimises with the default method (Cobyla). Throws ComputationError if the
/// objective returns a non-finite value.
OptimizationOutcome minimize(const Objective& objective, std::span<const double> x0,
                             const OptimizerConfig& config);

}  // namespace kadapt
