// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

// Dense-matrix ADAPT loop used to cross-check run_adapt on small registers.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dense.hpp"
#include "kadapt/integrals.hpp"
#include "kadapt/optimizer.hpp"
#include "kadapt/pool.hpp"

namespace kadapt::testing {

struct ReferenceStep {
  std::vector<std::size_t> selected;
  std::vector<double> gradients;
  double energy = 0.0;
};

class DenseAdapt {
 public:
  DenseAdapt(const Matrix& h, const OperatorPool& pool);

  /// dE/dtheta for appending each generator: <psi|[H, G]|psi> = 2 Re <psi|H G|psi>.
  std::vector<double> gradients(const Vector& psi) const;

  /// exp(theta_n G_n) ... exp(theta_1 G_1) psi0, via eigendecompositions.
  Vector prepare(const Vector& psi0, const std::vector<std::size_t>& ops,
                 const std::vector<double>& theta) const;

  double energy(const Vector& psi) const { return psi.dot(h_ * psi).real(); }

  /// Runs `steps` chunks of size k, optimising with the given config.
  std::vector<ReferenceStep> run(const Vector& psi0, int k, int steps, const OptimizerConfig& cfg) const;

 private:
  Matrix h_;
  std::vector<Matrix> g_;
  std::vector<Matrix> vectors_;
  std::vector<Eigen::VectorXd> values_;  // i G = V diag(values) V^dagger
};

/// Random real integrals with the full eightfold symmetry.
MolecularIntegrals random_integrals(int n_orbitals, int n_electrons, std::mt19937_64& rng);

}  // namespace kadapt::testing
