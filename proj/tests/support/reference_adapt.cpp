// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "reference_adapt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kadapt::testing {

DenseAdapt::DenseAdapt(const Matrix& h, const OperatorPool& pool) : h_(h) {
  for (const auto& op : pool.operators) {
    const Matrix g = fermion_matrix(op.generator, pool.n_qubits);
    const Matrix ig = Complex{0.0, 1.0} * g;
    Eigen::SelfAdjointEigenSolver<Matrix> es(ig);
    g_.push_back(g);
    vectors_.push_back(es.eigenvectors());
    values_.push_back(es.eigenvalues());
  }
}

std::vector<double> DenseAdapt::gradients(const Vector& psi) const {
  const Vector hpsi = h_ * psi;
  std::vector<double> out;
  for (const auto& g : g_) out.push_back(2.0 * hpsi.dot(g * psi).real());
  return out;
}

Vector DenseAdapt::prepare(const Vector& psi0, const std::vector<std::size_t>& ops,
                           const std::vector<double>& theta) const {
  Vector psi = psi0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& v = vectors_[ops[i]];
    // exp(theta G) = V exp(-i theta diag) V^dagger
    const Eigen::VectorXcd phase =
        (values_[ops[i]].cast<Complex>() * Complex{0.0, -theta[i]}).array().exp().matrix();
    psi = v * phase.asDiagonal() * (v.adjoint() * psi);
  }
  return psi;
}

std::vector<ReferenceStep> DenseAdapt::run(const Vector& psi0, int k, int steps,
                                           const OptimizerConfig& cfg) const {
  std::vector<ReferenceStep> out;
  std::vector<std::size_t> ops;
  std::vector<double> theta;
  double current = energy(psi0);
  for (int s = 0; s < steps; ++s) {
    ReferenceStep step;
    step.gradients = gradients(prepare(psi0, ops, theta));
    std::vector<std::size_t> order(step.gradients.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(step.gradients[a]) > std::abs(step.gradients[b]);
    });
    for (int j = 0; j < k; ++j) {
      step.selected.push_back(order[static_cast<std::size_t>(j)]);
      ops.push_back(order[static_cast<std::size_t>(j)]);
      theta.push_back(0.0);
    }
    const auto outcome = minimize(
        [&](std::span<const double> t) {
          return energy(prepare(psi0, ops, std::vector<double>(t.begin(), t.end())));
        },
        theta, cfg);
    if (outcome.best_energy <= current) {
      theta = outcome.best_parameters;
      current = outcome.best_energy;
    }
    step.energy = current;
    out.push_back(step);
  }
  return out;
}

MolecularIntegrals random_integrals(int n_orbitals, int n_electrons, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 0.3);
  MolecularIntegrals m(n_orbitals, n_electrons);
  m.set_core_energy(g(rng));
  for (int p = 0; p < n_orbitals; ++p) {
    m.set_one_body(p, p, -1.5 + 0.5 * p + g(rng));
    for (int q = 0; q < p; ++q) m.set_one_body(p, q, 0.2 * g(rng));
  }
  for (int p = 0; p < n_orbitals; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r < n_orbitals; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const double base = (p == q && r == s) ? 0.6 : 0.0;
          m.set_two_body(p, q, r, s, base + 0.1 * g(rng));
        }
  return m;
}

}  // namespace kadapt::testing
