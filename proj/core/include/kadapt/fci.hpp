// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kadapt/pauli.hpp"

namespace kadapt {

/// Fixed particle number and twice the spin projection (n_up - n_down) under
/// the interleaved spin-orbital ordering.
struct Sector {
  int n_electrons = 0;
  int ms2 = 0;
};

enum class SolverKind { automatic, dense, lanczos };

struct SpectrumRequest {
  PauliSum hamiltonian;
  std::optional<Sector> sector;
  int n_eigenvalues = 1;
  SolverKind solver = SolverKind::automatic;
  /// Seeds the small random admixture in the Lanczos start vector.
  std::uint64_t seed = 0;
};

/// Basis indices of the requested sector, ascending (all 2^n when absent).
std::vector<std::uint64_t> sector_basis(int n_qubits, const std::optional<Sector>& sector);

/// Lowest eigenvalues of a Hermitian Pauli sum, ascending.
///
/// The automatic solver diagonalises densely when the (sector) dimension is at
/// most 4096 and otherwise runs Lanczos with full reorthogonalisation on a
/// matrix-free Pauli-sum product. Throws StructureError for non-Hermitian
/// input and DimensionError above 24 qubits.
std::vector<double> lowest_eigenvalues(const SpectrumRequest& req);

double exact_ground_energy(const SpectrumRequest& req);

/// Convenience: ground energy of `h` within (n_electrons, ms2).
double exact_ground_energy(const PauliSum& h, Sector sector,
                           SolverKind solver = SolverKind::automatic);

}  // namespace kadapt
