// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "kadapt/integrals.hpp"
#include "kadapt/pauli.hpp"
#include "kadapt/pool.hpp"
#include "kadapt/statevector.hpp"

namespace kadapt {

/// Geometry and reference energies stored next to an FCIDUMP as `<stem>.json`.
struct FixtureMetadata {
  std::string molecule;
  std::string basis;
  double bond_length_angstrom = 0.0;
  std::optional<double> hf_energy;
  std::optional<double> fci_energy;
};

std::filesystem::path sidecar_path(const std::filesystem::path& fcidump);

/// Reads the sidecar when present; nullopt when the file does not exist.
std::optional<FixtureMetadata> load_sidecar(const std::filesystem::path& fcidump);

/// Everything derived from one FCIDUMP: integrals, qubit Hamiltonian, the
/// screened pool with commutators, and the HF reference.
struct MolecularProblem {
  std::filesystem::path source;
  MolecularIntegrals integrals;
  std::optional<FixtureMetadata> metadata;
  PauliSum hamiltonian;
  OperatorPool pool;

  int n_qubits() const noexcept { return integrals.n_spin_orbitals(); }
  Statevector hartree_fock() const {
    return hartree_fock_state(n_qubits(), integrals.n_electrons());
  }
};

MolecularProblem load_problem(const std::filesystem::path& fcidump);

/// Qubit Hamiltonian of a set of integrals (JW of the fermionic Hamiltonian).
PauliSum qubit_hamiltonian(const MolecularIntegrals& m);

}  // namespace kadapt
