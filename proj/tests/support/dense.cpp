// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "dense.hpp"

#include <bit>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace kadapt::testing {
namespace {

Matrix single(bool x, bool z) {
  Matrix m(2, 2);
  const Complex i{0.0, 1.0};
  if (!x && !z) m << 1, 0, 0, 1;
  if (x && !z) m << 0, 1, 1, 0;
  if (x && z) m << 0, -i, i, 0;
  if (!x && z) m << 1, 0, 0, -1;
  return m;
}

}  // namespace

Matrix pauli_matrix(const PauliTerm& p) {
  Matrix m = Matrix::Identity(1, 1);
  // Build from the most significant qubit down so qubit 0 ends up rightmost.
  for (int q = p.n_qubits - 1; q >= 0; --q) {
    const bool x = (p.x_mask >> q) & 1U;
    const bool z = (p.z_mask >> q) & 1U;
    Matrix next = Eigen::kroneckerProduct(m, single(x, z)).eval();
    m = std::move(next);
  }
  return p.coefficient * m;
}

Matrix pauli_matrix(const PauliSum& s) {
  const auto d = Eigen::Index{1} << s.n_qubits();
  Matrix m = Matrix::Zero(d, d);
  for (const auto& t : s.terms()) m += pauli_matrix(t);
  return m;
}

Matrix annihilation_matrix(int mode, int n_modes) {
  const auto d = Eigen::Index{1} << n_modes;
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index n = 0; n < d; ++n) {
    if (!((n >> mode) & 1)) continue;
    const auto below = static_cast<std::uint64_t>(n) & ((std::uint64_t{1} << mode) - 1);
    const double sign = (std::popcount(below) & 1) ? -1.0 : 1.0;
    m(n ^ (Eigen::Index{1} << mode), n) = sign;
  }
  return m;
}

Matrix fermion_matrix(const FermionOperator& op, int n_modes) {
  const auto d = Eigen::Index{1} << n_modes;
  Matrix total = Matrix::Zero(d, d);
  for (const auto& t : op.terms()) {
    Matrix m = Matrix::Identity(d, d);
    for (const auto& l : t.product) {
      const Matrix a = annihilation_matrix(l.mode, n_modes);
      m = m * (l.creation ? Matrix(a.adjoint()) : a);
    }
    total += t.coefficient * m;
  }
  return total;
}

Matrix expm(const Matrix& a) { return a.exp(); }

Vector to_vector(const Statevector& s) {
  const auto a = s.amplitudes();
  Vector v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a[i];
  return v;
}

double sector_ground_energy(const Matrix& h, int n_electrons, int ms2) {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index b = 0; b < h.rows(); ++b) {
    const auto u = static_cast<std::uint64_t>(b);
    const int up = std::popcount(u & 0x5555555555555555ULL);
    const int down = std::popcount(u & 0xAAAAAAAAAAAAAAAAULL);
    if (up + down == n_electrons && up - down == ms2) idx.push_back(b);
  }
  const auto d = static_cast<Eigen::Index>(idx.size());
  Matrix sub(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) sub(i, j) = h(idx[i], idx[j]);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(sub, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

Statevector random_sector_state(int n_qubits, int n_electrons, int ms2, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const int up = std::popcount(b & 0x5555555555555555ULL);
    const int down = std::popcount(b & 0xAAAAAAAAAAAAAAAAULL);
    if (up + down == n_electrons && up - down == ms2) amps[b] = {g(rng), g(rng)};
  }
  Statevector s(n_qubits, std::move(amps));
  s.normalize();
  return s;
}

PauliTerm random_pauli(int n_qubits, std::mt19937_64& rng) {
  const std::uint64_t mask = n_qubits == 64 ? ~0ULL : (std::uint64_t{1} << n_qubits) - 1;
  return PauliTerm{n_qubits, rng() & mask, rng() & mask, Complex{1.0, 0.0}};
}

}  // namespace kadapt::testing
