// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "kadapt/fermion.hpp"
#include "kadapt/mapping.hpp"
#include "kadapt/pauli.hpp"
#include "kadapt/statevector.hpp"

namespace kadapt {

/// Anti-Hermitian double excitation a†_{v1} a†_{v0} a_{o1} a_{o0} - h.c.
/// moving two HF-occupied spin orbitals (o0 < o1) into two virtuals (v0 < v1).
struct ExcitationOperator {
  std::array<int, 2> occ{};
  std::array<int, 2> virt{};
  std::string label;  // D[o0,o1->v0,v1]
  FermionOperator generator;
  PauliSum qubit_image;  // JW image of `generator`, anti-Hermitian
  RotationFactors rotation_factors;
  /// [P, H] with P = -i * qubit_image Hermitian; set by precompute_commutators.
  std::optional<PauliSum> commutator_with_h;

  bool same_spin() const noexcept;
  /// Indices in the displayed (p, q, r, s) order: p = v1, q = v0, r = o1, s = o0.
  std::array<int, 4> pqrs() const noexcept { return {virt[1], virt[0], occ[1], occ[0]}; }
  /// Qubits carrying X/Y in every string of the image.
  std::uint64_t support_mask() const noexcept;
  /// Qubits carrying only the parity string Z.
  std::uint64_t z_string_mask() const noexcept;

  /// Canonical ordering used for deterministic tie-breaking.
  bool precedes(const ExcitationOperator& other) const noexcept {
    return std::tie(occ, virt) < std::tie(other.occ, other.virt);
  }
};

ExcitationOperator make_double_excitation(std::array<int, 2> occ, std::array<int, 2> virt,
                                          int n_qubits);

struct OperatorPool {
  std::vector<ExcitationOperator> operators;  // canonical order
  int n_qubits = 0;
  int n_electrons = 0;

  std::size_t size() const noexcept { return operators.size(); }
  std::size_t mixed_spin_count() const noexcept;
  std::size_t same_spin_count() const noexcept;
  bool commutators_ready() const noexcept;
};

/// Spin-conserving occupied→virtual double excitations from the HF reference
/// (interleaved spin orbitals, lowest `n_electrons` occupied).
OperatorPool build_pool(int n_electrons, int n_spin_orbitals);

/// Closed-form pool size: o↑o↓v↑v↓ + C(o↑,2)C(v↑,2) + C(o↓,2)C(v↓,2).
std::size_t expected_pool_size(int n_electrons, int n_spin_orbitals);

/// Fills every operator's commutator_with_h. Idempotent.
void precompute_commutators(OperatorPool& pool, const PauliSum& h);

/// Applies exp(theta G) for a pool operator.
void apply_excitation(Statevector& psi, const ExcitationOperator& op, double theta);

/// Labels, string counts and support qubits of every operator.
nlohmann::json pool_summary(const OperatorPool& pool);

}  // namespace kadapt
