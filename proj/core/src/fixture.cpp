// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/fixture.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "kadapt/error.hpp"
#include "kadapt/mapping.hpp"

namespace kadapt {

std::filesystem::path sidecar_path(const std::filesystem::path& fcidump) {
  auto p = fcidump;
  p.replace_extension(".json");
  return p;
}

std::optional<FixtureMetadata> load_sidecar(const std::filesystem::path& fcidump) {
  const auto path = sidecar_path(fcidump);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sidecar '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed sidecar '" + path.string() + "': " + e.what());
  }
  FixtureMetadata m;
  m.molecule = j.value("molecule", std::string{});
  m.basis = j.value("basis", std::string{});
  m.bond_length_angstrom = j.value("bond_length_angstrom", 0.0);
  if (j.contains("hf_energy")) m.hf_energy = j["hf_energy"].get<double>();
  if (j.contains("fci_energy")) m.fci_energy = j["fci_energy"].get<double>();
  return m;
}

PauliSum qubit_hamiltonian(const MolecularIntegrals& m) {
  return jordan_wigner(build_fermionic_hamiltonian(m), m.n_spin_orbitals());
}

MolecularProblem load_problem(const std::filesystem::path& fcidump) {
  MolecularProblem p;
  p.source = fcidump;
  p.integrals = parse_fcidump_file(fcidump);
  p.metadata = load_sidecar(fcidump);
  p.hamiltonian = qubit_hamiltonian(p.integrals);
  p.pool = build_pool(p.integrals.n_electrons(), p.integrals.n_spin_orbitals());
  precompute_commutators(p.pool, p.hamiltonian);
  return p;
}

}  // namespace kadapt
